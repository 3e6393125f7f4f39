import sys

import punctkit.common as common
from punctkit.common import exception
from punctkit.common.handler_helper import get_all_command_handlers
from punctkit.handlers.command_handler import ArgumentParser


def main(args=None):
  args = sys.argv[1:] if args is None else list(args)
  handlers = get_all_command_handlers()
  parser = ArgumentParser(
      prog="punctkit",
      description="Punctuation prediction for ASR transcripts.")
  parser.add_argument(
      "command",
      choices=sorted(handlers),
      help="Available commands.")

  if len(args) == 0:
    parser.parse_args(["-h"])
  try:
    cli_tool = parser.parse_args([args[0]])
    return handlers[cli_tool.command].handle(args[1:])
  except exception.PunctError as e:
    common.logger.error(str(e))
    return e.exit_code


if __name__ == '__main__':
  sys.exit(main())
