from punctkit.corpus_io import normalize_ellipsis
from punctkit.corpus_io import parse_timed_line
from punctkit.corpus_io import read_text_lines
from punctkit.corpus_io import strip_timestamps
from punctkit.common import exception
from punctkit.handlers.command_handler import CommandHandler
from punctkit.handlers.handler import command
from punctkit.handlers.handler import description


@command("normalize")
@description("Fold three full stops into an ellipsis, optionally turning an "
             "in-file into raw text first.")
class Normalize(CommandHandler):

  REQUIRED = ("infile",)
  INPUTS = ("infile",)
  OUTPUTS = ("outfile",)

  @classmethod
  def add_arguments(cls, parser):
    parser.add_argument("--infile", "-i", help="Input file path.")
    parser.add_argument("--outfile",
                        "-o",
                        help="Output file path, standard output if omitted.")
    parser.add_argument("--timestamps",
                        action="store_const",
                        const=True,
                        help="Input is an in-file of token:start-end fields; "
                        "strip the timestamps.")

  @classmethod
  def run(cls, config, **kwargs):
    lines = read_text_lines(config.infile)
    if config.timestamps:
      stripped = []
      for i, line in enumerate(lines):
        try:
          stripped.append(strip_timestamps(parse_timed_line(line)))
        except exception.PunctError as e:
          raise e.locate(config.infile, i + 1)
      lines = stripped
    cls.write_output(config, [normalize_ellipsis(l) for l in lines])
