"""Scoring of predicted punctuation against golden text.

Scores follow the usual per-class precision/recall/F1 reading, on a 0-100
scale. The summary weights every mark's F1 by its gold support; BLANK takes
no part in it. A wrong mark in place of another counts as a false positive
of the predicted mark and a false negative of the gold one.
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

from collections import namedtuple

import numpy as np
from sklearn.metrics import multilabel_confusion_matrix
from sklearn.metrics import precision_recall_fscore_support

import punctkit.common as common
from punctkit.common import exception
from punctkit.corpus_io import PunctClass
from punctkit.corpus_io import align_text_lines
from punctkit.corpus_io import read_in_file
from punctkit.corpus_io import read_text_lines

ClassScores = namedtuple(
    "ClassScores", ["klass", "tp", "fp", "fn", "precision", "recall", "f1"])
EvalReport = namedtuple("EvalReport", ["per_class", "weighted_f1", "support"])

MARKS = PunctClass.marks()
MARK_LABELS = [int(c) for c in MARKS]


class ConfusionCounts(object):
  """ Gold/predicted label pairs of one or more documents.

  Pairs of disjoint document sets merge with `+`; tp/fp/fn per mark come
  out in PunctClass.marks() order.
  """

  def __init__(self, gold=(), pred=()):
    self.gold = np.asarray(gold, dtype=np.int64)
    self.pred = np.asarray(pred, dtype=np.int64)

  @classmethod
  def from_labels(cls, gold, pred):
    return cls(gold, pred)

  def __add__(self, other):
    return ConfusionCounts(np.concatenate([self.gold, other.gold]),
                           np.concatenate([self.pred, other.pred]))

  def counts(self):
    if len(self.gold) == 0:
      zeros = np.zeros(len(MARKS), dtype=np.int64)
      return zeros, zeros, zeros
    # per label: [[tn, fp], [fn, tp]]
    matrices = multilabel_confusion_matrix(
        self.gold, self.pred, labels=MARK_LABELS)
    return matrices[:, 1, 1], matrices[:, 0, 1], matrices[:, 1, 0]

  def report(self):
    tp, fp, fn = self.counts()
    if len(self.gold) == 0:
      precision = recall = f1 = np.zeros(len(MARKS))
    else:
      precision, recall, f1, _ = precision_recall_fscore_support(
          self.gold, self.pred, labels=MARK_LABELS, average=None,
          zero_division=0)
    per_class = tuple(
        ClassScores(klass, int(tp[i]), int(fp[i]), int(fn[i]),
                    100.0 * float(precision[i]), 100.0 * float(recall[i]),
                    100.0 * float(f1[i])) for i, klass in enumerate(MARKS))
    support = {klass: int(tp[i] + fn[i]) for i, klass in enumerate(MARKS)}
    weighted_f1 = 0.0
    if sum(support.values()):
      weighted_f1 = 100.0 * float(precision_recall_fscore_support(
          self.gold, self.pred, labels=MARK_LABELS, average="weighted",
          zero_division=0)[2])
    return EvalReport(per_class, weighted_f1, support)


def evaluate(gold, pred):
  """ Score predicted documents against gold documents.

  :param gold: Sequence of gold LabeledDocument.
  :param pred: Sequence of predicted LabeledDocument, paired 1:1 with gold.
  :return: EvalReport.
  """
  gold, pred = list(gold), list(pred)
  if len(gold) != len(pred):
    exception.SHAPE_MISMATCH_EXCEPT("predicted corpus", len(pred), len(gold))
  gold_labels, pred_labels = [], []
  for i, (g, p) in enumerate(zip(gold, pred)):
    if len(g.labels) != len(p.labels):
      exception.SHAPE_MISMATCH_EXCEPT(
          "prediction of document {} `{}`".format(i + 1, g.doc_id),
          len(p.labels), len(g.labels))
    gold_labels.extend(g.labels)
    pred_labels.extend(p.labels)
  return ConfusionCounts.from_labels(gold_labels, pred_labels).report()


def evaluate_files(expected_path, out_path, in_path):
  """ Score an out-file against an expected-file.

  :param expected_path: Golden punctuated text, one line per document.
  :param out_path: Predicted punctuated text, one line per document.
  :param in_path: In-file the two texts were produced from.
  :return: EvalReport.
  """
  in_docs = read_in_file(in_path)
  expected = read_text_lines(expected_path)
  out = read_text_lines(out_path)
  counts = [(in_path, len(in_docs)), (expected_path, len(expected)),
            (out_path, len(out))]
  longest = max(n for _, n in counts)
  for path, n in counts:
    if n < longest:
      exception.LINE_COUNT_EXCEPT(path, n, longest)
  gold = align_text_lines(expected, in_docs, expected_path)
  pred = align_text_lines(out, in_docs, out_path)
  report = evaluate(gold, pred)
  common.logger.info("Evaluated {} documents: weighted F1 {:.2f}.".format(
      len(gold), report.weighted_f1))
  return report


def format_report_table(report):
  """ Render the weighted F1 and one F1 per mark as a two-row table. """
  headers = ["Weighted-F1"] + ["{}-F1".format(s.klass.title)
                               for s in report.per_class]
  values = ["{:.2f}".format(report.weighted_f1)] + [
      "{:.2f}".format(s.f1) for s in report.per_class
  ]
  widths = [max(len(h), len(v)) for h, v in zip(headers, values)]
  return "\n".join([
      " | ".join(h.rjust(w) for h, w in zip(headers, widths)),
      "-+-".join("-" * w for w in widths),
      " | ".join(v.rjust(w) for v, w in zip(values, widths)),
  ])


def format_report_kv(report):
  """ Render the report as `key=value` lines. """
  lines = ["weighted_f1={:.2f}".format(report.weighted_f1)]
  for s in report.per_class:
    name = s.klass.name.lower()
    lines.extend([
        "{}_f1={:.2f}".format(name, s.f1),
        "{}_precision={:.2f}".format(name, s.precision),
        "{}_recall={:.2f}".format(name, s.recall),
        "{}_tp={}".format(name, s.tp),
        "{}_fp={}".format(name, s.fp),
        "{}_fn={}".format(name, s.fn),
        "{}_support={}".format(name, report.support[s.klass]),
    ])
  return "\n".join(lines)
