from punctkit.corpus_io import format_conll
from punctkit.corpus_io import read_labeled_pair
from punctkit.handlers.command_handler import CommandHandler
from punctkit.handlers.handler import command
from punctkit.handlers.handler import description


@command("align")
@description("Derive word-level punctuation labels from golden text and "
             "print them as word<TAB>LABEL lines, one block per document.")
class Align(CommandHandler):

  REQUIRED = ("data",)
  INPUTS = ("data",)
  OUTPUTS = ("outfile",)

  @classmethod
  def add_arguments(cls, parser):
    cls.add_data_argument(parser, "In-file and expected-file to align.")
    parser.add_argument("--outfile",
                        "-o",
                        help="Output file path, standard output if omitted.")

  @classmethod
  def run(cls, config, **kwargs):
    blocks = []
    for in_path, expected_path in config.data:
      blocks.extend(
          format_conll(doc) + "\n"
          for doc in read_labeled_pair(in_path, expected_path))
    cls.write_output(config, blocks)
