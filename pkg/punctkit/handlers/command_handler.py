from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

import argparse
import os
import sys

import punctkit.common as common
from punctkit.common import exception
from punctkit.common.config import RunConfig
from punctkit.corpus_io import write_text_lines
from .handler import Handler


class ArgumentParser(argparse.ArgumentParser):
  """ argparse parser whose usage errors raise BadConfig instead of exiting
  with status 2.
  """

  def error(self, message):
    self.print_usage(sys.stderr)
    exception.BAD_CONFIG_EXCEPT("arguments", "`{}`".format(self.prog), message)


class CommandHandler(Handler):
  """ This class is base command handler class.
  All subcommand handler classes MUST inherit this class.
  A handler's class name is the pascal case of its file name, which is the
  snake case of the subcommand.
  """

  REQUIRED = ()
  INPUTS = ()
  OUTPUTS = ()

  @classmethod
  def get_parser(cls):
    parser = ArgumentParser(prog="punctkit {}".format(cls.COMMAND),
                            description=cls.DESCRIPTION)
    cls.add_arguments(parser)
    parser.add_argument("--config",
                        help="YAML file with option values. Flags given on "
                        "the command line take precedence.")
    parser.add_argument("--logging-level",
                        dest="logging_level",
                        help="The logging level, default is INFO. Change it "
                        "to DEBUG to see more details or to WARNING to see "
                        "less.")
    return parser

  @classmethod
  def add_arguments(cls, parser):
    """ Add the command's own options to its parser.

    :param parser: argparse.ArgumentParser.
    """
    pass

  @classmethod
  def add_data_argument(cls, parser, help_text):
    parser.add_argument("--data",
                        "-d",
                        action="append",
                        metavar="IN_FILE:EXPECTED_FILE",
                        help=help_text)

  @classmethod
  def args_check(cls, config, **kwargs):
    """ Refuse an output path that names one of the command's inputs. """
    inputs = set(os.path.abspath(p) for p in config.input_paths(cls.INPUTS))
    for name in cls.OUTPUTS:
      path = getattr(config, name)
      if path and os.path.abspath(path) in inputs:
        exception.BAD_CONFIG_EXCEPT(name, path, "it is also an input file")

  @classmethod
  def handle(cls, args):
    """ Parse the command's arguments, validate them and run it.

    :param args: Command-line arguments after the subcommand name.
    :return: Exit code.
    """
    namespace = cls.get_parser().parse_args(args)
    config = RunConfig.from_namespace(cls.COMMAND, namespace)
    cls.args_check(config)
    config.validate(cls.REQUIRED, cls.INPUTS, cls.OUTPUTS)
    common.logger.info("Start {}:".format(cls.COMMAND))
    code = cls.run(config) or 0
    common.logger.info("{} completes successfully.".format(
        cls.COMMAND.capitalize()))
    return code

  @classmethod
  def write_output(cls, config, lines):
    """ Write lines to config.outfile, or to standard output without one.

    :param config: RunConfig.
    :param lines: Output lines without terminators.
    """
    lines = list(lines)
    if config.outfile:
      write_text_lines(config.outfile, lines)
      common.logger.info("Wrote {} lines to {}.".format(
          len(lines), config.outfile))
    elif lines:
      cls.echo("\n".join(lines))

  @staticmethod
  def echo(text):
    """ Print UTF-8 text to standard output whatever its locale. """
    buf = getattr(sys.stdout, "buffer", None)
    if buf is None:
      sys.stdout.write(text + "\n")
    else:
      sys.stdout.flush()
      buf.write((text + "\n").encode(common.ENCODING))
      buf.flush()
