from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

import punctkit.common as common


class Handler(object):
  """ This class is base handler class.
  Command handler classes inherit this class.

  All command handlers MUST put decorator @command to register their
  subcommand name.
  """

  COMMAND = None
  DESCRIPTION = ''

  @classmethod
  def check_cls(cls):
    if not cls.COMMAND:
      common.logger.warning(
          "{} doesn't have COMMAND. "
          "Please use Handler.command decorator to register COMMAND.".format(
              cls.__name__))

  @classmethod
  def args_check(cls, config, **kwargs):
    """ Check args. e.g. if all required files are given.
    Raise exception if failed.

    :param config: RunConfig of the command.
    :param kwargs: Other args.
    """
    pass

  @classmethod
  def run(cls, config, **kwargs):
    """ Main method of a handler, doing the work of its command.

    :param config: Validated RunConfig.
    :param kwargs: Other args.
    :return: Exit code.
    """
    raise NotImplementedError("{} is not implemented.".format(cls.COMMAND))

  @staticmethod
  def command(name):
    return Handler.property_register("COMMAND", name)

  @staticmethod
  def description(d):
    return Handler.property_register("DESCRIPTION", d)

  @staticmethod
  def property_register(name, value):

    def deco(cls):
      setattr(cls, name, value)
      return cls

    return deco


command = Handler.command
description = Handler.description
property_register = Handler.property_register
