from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

import numpy as np

import punctkit.common as common
from punctkit.common import exception
from punctkit.features import DEFAULT_CONTEXT_RADIUS
from punctkit.features import PauseFeatureConfig
from punctkit.features import check_context_radius
from punctkit.features import check_pause_config
from punctkit.features import extract_features
from punctkit.model import LinearModel
from punctkit.model import NUM_CLASSES


class AveragedPerceptron(object):
  """ Online multi-class perceptron with lazily averaged weights.

  `_totals[f]` holds the sum of the weights of f over all steps up to
  `_stamps[f]`, the step f last changed at.
  """

  def __init__(self):
    self.weights = {}
    self._totals = {}
    self._stamps = {}
    self.i = 0

  def scores(self, features):
    scores = np.zeros(NUM_CLASSES, dtype=np.float64)
    for f in features:
      vector = self.weights.get(f)
      if vector is not None:
        scores += vector
    return scores

  def predict(self, features):
    return int(np.argmax(self.scores(features)))

  def update(self, truth, guess, features):
    if truth != guess:
      for f in features:
        vector = self.weights.get(f)
        if vector is None:
          vector = self.weights[f] = np.zeros(NUM_CLASSES, dtype=np.float64)
          self._totals[f] = np.zeros(NUM_CLASSES, dtype=np.float64)
          self._stamps[f] = self.i
        self._totals[f] += (self.i - self._stamps[f]) * vector
        self._stamps[f] = self.i
        vector[truth] += 1.0
        vector[guess] -= 1.0
    self.i += 1

  def average(self):
    averaged = {}
    if self.i == 0:
      return averaged
    for f, vector in self.weights.items():
      total = self._totals[f] + (self.i - self._stamps[f]) * vector
      mean = total / self.i
      if np.any(mean):
        averaged[f] = mean
    return averaged


def train(corpus,
          epochs=5,
          seed=42,
          context_radius=DEFAULT_CONTEXT_RADIUS,
          pause_config=None,
          timestamps=None):
  """ Train an averaged perceptron tagger.

  Documents are visited in an order shuffled anew every epoch from `seed`,
  so equal inputs give bit-identical weights.

  :param corpus: Sequence of gold LabeledDocument.
  :param epochs: Passes over the corpus; 0 gives a model predicting BLANK.
  :param seed: Seed of the document shuffle.
  :param context_radius: Neighbouring words read on each side of a word.
  :param pause_config: PauseFeatureConfig, pause features are off by default.
  :param timestamps: Optional per-document lists of (start_ms, end_ms) pairs
    parallel to the corpus, needed by pause features.
  :return: LinearModel.
  """
  corpus = list(corpus)
  if not corpus:
    exception.EMPTY_CORPUS_EXCEPT("for training")
  if int(epochs) != epochs or epochs < 0:
    exception.BAD_CONFIG_EXCEPT("epochs", epochs, "must be an integer >= 0")
  check_context_radius(context_radius)
  pause_config = pause_config or PauseFeatureConfig()
  check_pause_config(pause_config)
  if timestamps is None:
    timestamps = [None] * len(corpus)
  elif len(timestamps) != len(corpus):
    exception.SHAPE_MISMATCH_EXCEPT("timestamps", len(timestamps), len(corpus))

  instances = []
  for doc, stamps in zip(corpus, timestamps):
    features = [
        extract_features(doc.words, stamps, p, pause_config, context_radius)
        for p in range(len(doc.words))
    ]
    instances.append((features, [int(l) for l in doc.labels]))
  common.logger.info("Training on {} documents, {} words, {} epochs.".format(
      len(instances), sum(len(f) for f, _ in instances), epochs))

  perceptron = AveragedPerceptron()
  rng = np.random.RandomState(seed)
  history = []
  for epoch in range(int(epochs)):
    correct = total = 0
    for idx in rng.permutation(len(instances)):
      features, labels = instances[idx]
      for f, truth in zip(features, labels):
        guess = perceptron.predict(f)
        perceptron.update(truth, guess, f)
        correct += guess == truth
        total += 1
    accuracy = correct / total if total else 0.0
    history.append(accuracy)
    common.logger.info("Epoch {}/{}: training accuracy {:.4f}.".format(
        epoch + 1, epochs, accuracy))

  return LinearModel(weights=perceptron.average(),
                     averaged=True,
                     epochs_trained=int(epochs),
                     context_radius=context_radius,
                     pause_config=pause_config,
                     history=history)
