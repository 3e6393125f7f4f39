from punctkit.handlers.command import *  # noqa
from punctkit.handlers.command_handler import CommandHandler
import punctkit.common as common


def get_all_command_handlers():
  """ Get a dict of all command handler classes.
  e.g. {'stats': Stats handler class, ...}.

  :return: Dict.
  """
  handlers = {}
  for handler in CommandHandler.__subclasses__():
    handler.check_cls()
    if handler.COMMAND in handlers:
      common.logger.warning("Command {} is registered by {} and {}.".format(
          handler.COMMAND, handlers[handler.COMMAND].__name__,
          handler.__name__))
    handlers[handler.COMMAND] = handler
  return handlers
