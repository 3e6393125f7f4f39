from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

from collections import namedtuple

import numpy as np

import punctkit.common as common
from punctkit.common import exception
from punctkit.corpus_io import PunctClass

CorpusStats = namedtuple("CorpusStats",
                         ["samples", "mean_words_per_sample", "rate_per_1000"])

TABLE_COLUMNS = ["Dataset", "Samples", "Mean Words per Sample"
                ] + [c.title for c in PunctClass.marks()]


class LabelCounts(object):
  """ Per-class label counts of a corpus.

  Counts of disjoint corpora merge with `+`, so documents may be counted
  independently.
  """

  def __init__(self, samples=0, words=0, counts=None):
    self.samples = samples
    self.words = words
    self.counts = np.zeros(len(PunctClass), dtype=np.int64) \
        if counts is None else np.asarray(counts, dtype=np.int64)

  @classmethod
  def from_document(cls, doc):
    return cls(1, len(doc.labels),
               np.bincount(np.asarray(doc.labels, dtype=np.int64),
                           minlength=len(PunctClass)))

  def __add__(self, other):
    return LabelCounts(self.samples + other.samples, self.words + other.words,
                       self.counts + other.counts)

  def to_stats(self):
    if self.samples == 0:
      exception.EMPTY_CORPUS_EXCEPT(reason="no documents")
    if self.words == 0:
      exception.EMPTY_CORPUS_EXCEPT(reason="no words")
    rates = 1000.0 * self.counts / self.words
    return CorpusStats(
        samples=self.samples,
        mean_words_per_sample=self.words / self.samples,
        rate_per_1000={c: float(rates[c]) for c in PunctClass.marks()})


def compute_stats(docs):
  """ Profile a labeled corpus.

  :param docs: Sequence of LabeledDocument.
  :return: CorpusStats with punctuation rates normalized per 1000 words.
  """
  total = LabelCounts()
  for doc in docs:
    total = total + LabelCounts.from_document(doc)
  stats = total.to_stats()
  common.logger.debug("Counted {} words in {} samples.".format(
      total.words, total.samples))
  return stats


def format_stats_table(rows):
  """ Render (name, CorpusStats) rows as a table in the column order of
  the usual dataset profile: samples, mean words, then one rate per mark.
  """
  body = []
  for name, stats in rows:
    body.append([name, str(stats.samples),
                 "{:.2f}".format(stats.mean_words_per_sample)] + [
                     "{:.3f}".format(stats.rate_per_1000[c])
                     for c in PunctClass.marks()
                 ])
  widths = [
      max([len(TABLE_COLUMNS[i])] + [len(r[i]) for r in body])
      for i in range(len(TABLE_COLUMNS))
  ]
  lines = [" | ".join(h.ljust(w) for h, w in zip(TABLE_COLUMNS, widths))]
  lines.append("-+-".join("-" * w for w in widths))
  for r in body:
    lines.append(" | ".join([r[0].ljust(widths[0])] +
                            [v.rjust(w) for v, w in zip(r[1:], widths[1:])]))
  return "\n".join(lines)
