from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

import io

import numpy as np

import punctkit.common as common
from punctkit.common import exception
from punctkit.corpus_io import PunctClass
from punctkit.features import DEFAULT_CONTEXT_RADIUS
from punctkit.features import PauseFeatureConfig
from punctkit.features import check_context_radius
from punctkit.features import check_pause_config
from punctkit.features import extract_features

FORMAT_NAME = "#punctkit-model"
FORMAT_VERSION = 1
NUM_CLASSES = len(PunctClass)


class LinearModel(object):
  """ Linear multi-class scorer over sparse feature keys.

  `weights` maps a feature key to a vector with one weight per PunctClass.
  Keys missing from the mapping weigh zero.
  """

  def __init__(self,
               weights=None,
               averaged=True,
               epochs_trained=0,
               context_radius=DEFAULT_CONTEXT_RADIUS,
               pause_config=None,
               history=None):
    self._weights = {}
    for key, vector in (weights or {}).items():
      vector = np.asarray(vector, dtype=np.float64)
      if vector.shape != (NUM_CLASSES,):
        exception.SHAPE_MISMATCH_EXCEPT("weights of `{}`".format(key),
                                        vector.size, NUM_CLASSES)
      self._weights[key] = vector
    self._averaged = bool(averaged)
    self._epochs_trained = int(epochs_trained)
    self._context_radius = int(context_radius)
    self._pause_config = pause_config or PauseFeatureConfig()
    self._history = list(history or [])

  @property
  def weights(self):
    return self._weights

  @property
  def averaged(self):
    return self._averaged

  @property
  def epochs_trained(self):
    return self._epochs_trained

  @property
  def context_radius(self):
    return self._context_radius

  @property
  def pause_config(self):
    return self._pause_config

  @property
  def history(self):
    return self._history

  def features(self, words, timestamps, position):
    return extract_features(words, timestamps, position, self._pause_config,
                            self._context_radius)

  def scores(self, features):
    scores = np.zeros(NUM_CLASSES, dtype=np.float64)
    for f in features:
      vector = self._weights.get(f)
      if vector is not None:
        scores += vector
    return scores

  def predict_label(self, features):
    # np.argmax returns the first maximum, BLANK wins ties
    return PunctClass(int(np.argmax(self.scores(features))))

  def same_weights(self, other):
    if set(self._weights) != set(other.weights):
      return False
    return all(
        np.array_equal(v, other.weights[k]) for k, v in self._weights.items())

  def save(self, path):
    """ Write the model as sorted `feature<TAB>7 weights` lines.

    :param path: Output model file path.
    """
    lines = [
        "{}\t{}".format(FORMAT_NAME, FORMAT_VERSION),
        "#averaged\t{}".format(int(self._averaged)),
        "#epochs_trained\t{}".format(self._epochs_trained),
        "#context_radius\t{}".format(self._context_radius),
        "#pauses\t{}".format(int(self._pause_config.enabled)),
        "#pause_buckets\t{}".format(",".join(
            str(e) for e in self._pause_config.bucket_edges_ms)),
    ]
    for key in sorted(self._weights):
      lines.append("\t".join([key] +
                             [repr(float(w)) for w in self._weights[key]]))
    with io.open(path, "w", encoding=common.ENCODING, newline="\n") as f:
      f.write("\n".join(lines) + "\n")
    common.logger.info("Saved model with {} features to {}.".format(
        len(self._weights), path))

  @classmethod
  def load(cls, path):
    """ Read a model written by `save`.

    :param path: Model file path.
    :return: LinearModel.
    """
    with io.open(path, "r", encoding=common.ENCODING, newline="") as f:
      content = f.read()
    try:
      model = cls._parse(content)
    except exception.PunctError as e:
      raise e.locate(path)
    common.logger.info("Loaded model with {} features from {}.".format(
        len(model.weights), path))
    return model

  @classmethod
  def _parse(cls, content):
    header = {}
    header_line = {}
    weights = {}
    for i, line in enumerate(content.split("\n")):
      if not line:
        continue
      fields = line.split("\t")
      if line.startswith("#"):
        if len(fields) != 2:
          exception.MODEL_FORMAT_EXCEPT(i + 1, "bad header line")
        header[fields[0]] = fields[1]
        header_line[fields[0]] = i + 1
        continue
      if len(fields) != NUM_CLASSES + 1:
        exception.MODEL_FORMAT_EXCEPT(
            i + 1, "expected a feature and {} weights".format(NUM_CLASSES))
      if fields[0] in weights:
        exception.MODEL_FORMAT_EXCEPT(i + 1,
                                      "duplicate feature `{}`".format(fields[0]))
      try:
        weights[fields[0]] = np.array([float(w) for w in fields[1:]],
                                      dtype=np.float64)
      except ValueError:
        exception.MODEL_FORMAT_EXCEPT(i + 1, "weights must be numbers")

    if header.get(FORMAT_NAME) != str(FORMAT_VERSION):
      exception.MODEL_FORMAT_EXCEPT(
          1, "not a {} version {} file".format(FORMAT_NAME[1:], FORMAT_VERSION))
    try:
      buckets = header.get("#pause_buckets", "")
      pause_config = PauseFeatureConfig(
          enabled=bool(int(header.get("#pauses", "0"))),
          bucket_edges_ms=tuple(int(e) for e in buckets.split(",") if e))
      averaged = bool(int(header.get("#averaged", "1")))
      epochs_trained = int(header.get("#epochs_trained", "0"))
      context_radius = int(
          header.get("#context_radius", str(DEFAULT_CONTEXT_RADIUS)))
    except ValueError:
      exception.MODEL_FORMAT_EXCEPT(1, "bad header value")
    try:
      check_context_radius(context_radius)
    except exception.BadConfig as e:
      exception.MODEL_FORMAT_EXCEPT(header_line.get("#context_radius", 1),
                                    e.message.rstrip("."))
    if pause_config.enabled:
      try:
        check_pause_config(pause_config)
      except exception.BadConfig as e:
        exception.MODEL_FORMAT_EXCEPT(header_line.get("#pause_buckets", 1),
                                      e.message.rstrip("."))
    return cls(weights=weights,
               averaged=averaged,
               epochs_trained=epochs_trained,
               context_radius=context_radius,
               pause_config=pause_config)
