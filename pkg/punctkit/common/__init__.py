from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

import inspect
import logging

logger = logging.getLogger('punctkit')

# create console handler and formatter for logger
console = logging.StreamHandler()
formatter = logging.Formatter(
    '%(asctime)s - %(name)s - %(levelname)s - %(message)s')
console.setFormatter(formatter)
logger.addHandler(console)
logger.setLevel(logging.INFO)

ENCODING = 'utf-8'


def set_logging_level(logging_level):
  """ Apply a logging level to the package logger and its console handler.

  :param logging_level: Level name such as INFO or DEBUG, or a level number.
  """
  if not isinstance(logging_level, int):
    logging_level = str(logging_level).upper()
  logger.setLevel(logging_level)
  logger.handlers[0].setLevel(logging_level)


def get_param_doc_dict(funcs):
  """ Get doc of funcs params.

  :param funcs: List of (function, {param_name: argparse kwargs}) tuples.
  :return: Dict of params doc.
  """

  def helper(doc, func):
    first_idx = doc.find(":param")
    last_idx = doc.find(":return")
    last_idx = last_idx if last_idx != -1 else len(doc)
    param_doc = doc[first_idx:last_idx]
    params_doc = param_doc.split(":param ")[1:]
    return {
        p[:p.find(": ")]: " ".join(p[p.find(": ") + len(": "):].split()) +
        " (from {})".format(func.__module__ + "." + func.__name__)
        for p in params_doc
    }

  param_doc_dict = {}
  for func, persists in funcs:
    doc = inspect.getdoc(func) or ""
    doc_dict = helper(doc, func)
    for k, v in persists.items():
      param_doc_dict[k] = {"doc": doc_dict.get(k, ""), "params": v}
  return param_doc_dict


def add_argument_group(parser, group_name, funcs):
  """ Add a group of --options documented by the `:param` docs of funcs.

  Underscores in parameter names become dashes on the command line.

  :param parser: argparse.ArgumentParser.
  :param group_name: Title of the argument group.
  :param funcs: List of (function, {param_name: argparse kwargs}) tuples.
  :return: The created argument group.
  """
  group = parser.add_argument_group(group_name)
  param_doc_dict = get_param_doc_dict(funcs)
  for k, v in param_doc_dict.items():
    group.add_argument("--{}".format(k.replace("_", "-")),
                       dest=k,
                       help=v["doc"],
                       **v["params"])
  return group
