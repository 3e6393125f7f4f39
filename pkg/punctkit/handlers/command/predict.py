from punctkit.backend import TaggerBackend
from punctkit.corpus_io import read_in_file
from punctkit.corpus_io import render_punctuated
from punctkit.handlers.command_handler import CommandHandler
from punctkit.handlers.handler import command
from punctkit.handlers.handler import description
import punctkit.common as common


@command("predict")
@description("Punctuate an in-file with a trained model, one line per "
             "document.")
class Predict(CommandHandler):

  REQUIRED = ("infile", "model")
  INPUTS = ("infile", "model")
  OUTPUTS = ("outfile",)

  @classmethod
  def add_arguments(cls, parser):
    parser.add_argument("--infile", "-i", help="In-file path.")
    parser.add_argument("--model", "-m", help="Model file path.")
    parser.add_argument("--outfile",
                        "-o",
                        help="Out-file path, standard output if omitted.")
    common.add_argument_group(parser, "window arguments", [
        (TaggerBackend.prepare, {
            "chunk_size": {
                "type": int
            },
            "overlap": {
                "type": int
            },
        }),
    ])

  @classmethod
  def run(cls, config, **kwargs):
    rep = TaggerBackend.prepare(config.model, config.chunk_size,
                                config.overlap)
    labeled = rep.run_all(read_in_file(config.infile))
    cls.write_output(config, [render_punctuated(doc) for doc in labeled])
