import io
import os

import yaml

import punctkit.common as common
from punctkit.common import exception
from punctkit.chunker import check_chunk_config
from punctkit.features import PauseFeatureConfig
from punctkit.features import check_context_radius
from punctkit.features import check_pause_config


class RunConfig(object):
  """ Settings of one command run.

  Values come from the defaults below, then from the YAML file named by
  --config, then from explicit command-line flags.
  """

  DEFAULTS = {
      "infile": None,
      "outfile": None,
      "expected": None,
      "out": None,
      "data": [],
      "model": None,
      "chunk_size": 100,
      "overlap": 20,
      "epochs": 5,
      "seed": 42,
      "pauses": False,
      "pause_buckets": [100, 250, 500, 1000],
      "context_radius": 2,
      "timestamps": False,
      "logging_level": "INFO",
  }

  def __init__(self, command, **kwargs):
    unknown = set(kwargs) - set(self.DEFAULTS)
    if unknown:
      exception.BAD_CONFIG_EXCEPT("option", ", ".join(sorted(unknown)),
                                  "unknown option")
    self.command = command
    for k, v in self.DEFAULTS.items():
      setattr(self, k, kwargs.get(k, v))
    if isinstance(self.data, str):
      self.data = [self.data]
    self.data = [self._parse_pair(p) for p in self.data or []]
    self.pause_buckets = self._parse_buckets(self.pause_buckets)

  @classmethod
  def from_namespace(cls, command, namespace):
    """ Merge defaults, an optional YAML file and parsed arguments.

    :param command: Subcommand name.
    :param namespace: argparse.Namespace; None values count as not given.
    :return: RunConfig.
    """
    values = {}
    config_path = getattr(namespace, "config", None)
    if config_path:
      values.update(cls.load_yaml(config_path))
    for k, v in vars(namespace).items():
      if k != "config" and v is not None:
        values[k] = v
    return cls(command, **values)

  @staticmethod
  def load_yaml(path):
    if not os.path.isfile(path):
      exception.BAD_CONFIG_EXCEPT("config", path, "no such file")
    with io.open(path, "r", encoding=common.ENCODING) as f:
      try:
        values = yaml.safe_load(f)
      except yaml.YAMLError as e:
        exception.BAD_CONFIG_EXCEPT("config", path, e)
    if values is None:
      return {}
    if not isinstance(values, dict):
      exception.BAD_CONFIG_EXCEPT("config", path, "expected a mapping")
    return {k.replace("-", "_"): v for k, v in values.items()}

  @staticmethod
  def _parse_pair(pair):
    if isinstance(pair, (list, tuple)):
      parts = list(pair)
    else:
      parts = str(pair).split(":")
    if len(parts) != 2 or not all(parts):
      exception.BAD_CONFIG_EXCEPT("data", pair,
                                  "expected IN_FILE:EXPECTED_FILE")
    return tuple(parts)

  @staticmethod
  def _parse_buckets(buckets):
    if isinstance(buckets, str):
      buckets = [b for b in buckets.split(",") if b.strip()]
    try:
      return [int(b) for b in buckets]
    except (TypeError, ValueError):
      exception.BAD_CONFIG_EXCEPT("pause_buckets", buckets,
                                  "expected comma separated integers")

  @property
  def pause_config(self):
    return PauseFeatureConfig(bool(self.pauses), tuple(self.pause_buckets))

  def input_paths(self, names):
    paths = []
    for name in names:
      if name == "data":
        paths.extend(p for pair in self.data for p in pair)
      elif getattr(self, name) is not None:
        paths.append(getattr(self, name))
    return paths

  def validate(self, required=(), inputs=(), outputs=()):
    """ Check paths and numbers before any work starts.

    :param required: Option names that must be set.
    :param inputs: Option names holding files that must exist.
    :param outputs: Option names holding files whose directory must exist.
    """
    for name in required:
      if not getattr(self, name):
        exception.BAD_CONFIG_EXCEPT(name, getattr(self, name), "is required")
    for path in self.input_paths(inputs):
      if not os.path.isfile(path):
        exception.BAD_CONFIG_EXCEPT("input", path, "no such file")
    for name in outputs:
      path = getattr(self, name)
      if path is None:
        continue
      directory = os.path.dirname(os.path.abspath(path))
      if not os.path.isdir(directory):
        exception.BAD_CONFIG_EXCEPT(name, path, "directory does not exist")
    for name in ("chunk_size", "overlap", "epochs", "seed", "context_radius"):
      if isinstance(getattr(self, name), bool) or \
          not isinstance(getattr(self, name), int):
        exception.BAD_CONFIG_EXCEPT(name, getattr(self, name),
                                    "must be an integer")
    check_chunk_config(self.chunk_size, self.overlap)
    if self.epochs < 0:
      exception.BAD_CONFIG_EXCEPT("epochs", self.epochs, "must be >= 0")
    check_context_radius(self.context_radius)
    check_pause_config(self.pause_config)
    try:
      common.set_logging_level(self.logging_level)
    except (TypeError, ValueError):
      exception.BAD_CONFIG_EXCEPT("logging_level", self.logging_level,
                                  "unknown level")
