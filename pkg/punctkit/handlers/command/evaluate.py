from punctkit.evaluator import evaluate_files
from punctkit.evaluator import format_report_kv
from punctkit.evaluator import format_report_table
from punctkit.handlers.command_handler import CommandHandler
from punctkit.handlers.handler import command
from punctkit.handlers.handler import description


@command("eval")
@description("Score an out-file against an expected-file with per-mark and "
             "support-weighted F1.")
class Evaluate(CommandHandler):

  REQUIRED = ("expected", "out", "infile")
  INPUTS = ("expected", "out", "infile")

  @classmethod
  def add_arguments(cls, parser):
    parser.add_argument("--expected",
                        "-e",
                        help="Expected-file with golden punctuated text.")
    parser.add_argument("--out", help="Out-file with predicted text.")
    parser.add_argument("--infile", "-i", help="In-file path.")

  @classmethod
  def run(cls, config, **kwargs):
    report = evaluate_files(config.expected, config.out, config.infile)
    cls.echo(format_report_table(report))
    cls.echo("")
    cls.echo(format_report_kv(report))
