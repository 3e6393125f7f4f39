"""Synthetic corpus where every fifth word ends a sentence.

Sentences are five lowercase words, the first one capitalized, and the
fifth one is followed by a full stop. Documents group one to six sentences.
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

import numpy as np

from punctkit.corpus_io import LabeledDocument
from punctkit.corpus_io import PunctClass
from punctkit.corpus_io import RawDocument
from punctkit.corpus_io import TimedWord
from punctkit.corpus_io import render_punctuated
from punctkit.corpus_io import write_text_lines

VOCABULARY = [
    "ala", "kot", "dom", "las", "rzeka", "okno", "droga", "miasto", "pies",
    "stół", "kwiat", "słońce", "deszcz", "morze", "góra", "szkoła", "praca",
    "chleb", "mleko", "drzewo", "ptak", "noc", "dzień", "rok", "czas",
    "woda", "ogień", "ziemia", "niebo", "wiatr"
]
SENTENCE_LENGTH = 5
TRAIN_SENTENCES = 2000
HELD_OUT_SENTENCES = 200
WORD_MS = 200
GAP_MS = 50
SENTENCE_GAP_MS = 600


def make_corpus(sentence_count, seed=42, max_sentences_per_doc=6):
  """ Build matching raw and labeled documents.

  :return: (list of RawDocument, list of LabeledDocument)
  """
  rng = np.random.RandomState(seed)
  raw_docs, labeled_docs = [], []
  left = sentence_count
  while left > 0:
    n = min(left, rng.randint(1, max_sentences_per_doc + 1))
    left -= n
    doc_id = str(len(raw_docs) + 1)
    words, labels, timed = [], [], []
    clock = 0
    for _ in range(n):
      picks = rng.randint(len(VOCABULARY), size=SENTENCE_LENGTH)
      sentence = [VOCABULARY[i] for i in picks]
      sentence[0] = sentence[0].capitalize()
      for k, word in enumerate(sentence):
        timed.append(TimedWord(word, clock, clock + WORD_MS))
        clock += WORD_MS + GAP_MS
        words.append(word)
        labels.append(PunctClass.FULLSTOP
                      if k == SENTENCE_LENGTH - 1 else PunctClass.BLANK)
      clock += SENTENCE_GAP_MS
    raw_docs.append(RawDocument(doc_id, tuple(timed)))
    labeled_docs.append(LabeledDocument(doc_id, words, labels))
  return raw_docs, labeled_docs


def train_corpus():
  return make_corpus(TRAIN_SENTENCES, seed=42)


def held_out_corpus():
  return make_corpus(HELD_OUT_SENTENCES, seed=4242)


def format_in_line(doc):
  return " ".join(
      "{}:{}-{}".format(w.text, w.start_ms, w.end_ms) for w in doc.words)


def write_corpus(raw_docs, labeled_docs, in_path, expected_path):
  write_text_lines(in_path, [format_in_line(d) for d in raw_docs])
  write_text_lines(expected_path, [render_punctuated(d) for d in labeled_docs])
