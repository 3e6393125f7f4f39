"""Reading and writing of the competition text formats.

An in-file holds one transcript per line as space separated
`token:start-end` fields, timestamps in milliseconds. Expected-files and
out-files hold one punctuated text per line, aligned by line number with
the in-file. Punctuation is encoded per word as the mark that follows it.
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

from collections import namedtuple
import enum
import io
import re

import punctkit.common as common
from punctkit.common import exception


class PunctClass(enum.IntEnum):
  """ Label alphabet. The integer order is also the tie-break order. """

  BLANK = 0
  FULLSTOP = 1
  COMMA = 2
  QUESTION = 3
  EXCLAMATION = 4
  HYPHEN = 5
  ELLIPSIS = 6

  @property
  def char(self):
    return _CHARS[self]

  @property
  def title(self):
    return _TITLES[self]

  @classmethod
  def from_char(cls, char):
    return _BY_CHAR[char]

  @classmethod
  def marks(cls):
    return [c for c in cls if c is not cls.BLANK]


_CHARS = {
    PunctClass.BLANK: "",
    PunctClass.FULLSTOP: ".",
    PunctClass.COMMA: ",",
    PunctClass.QUESTION: "?",
    PunctClass.EXCLAMATION: "!",
    PunctClass.HYPHEN: "-",
    PunctClass.ELLIPSIS: "…",
}
_TITLES = {
    PunctClass.BLANK: "Blank",
    PunctClass.FULLSTOP: "Fullstop",
    PunctClass.COMMA: "Comma",
    PunctClass.QUESTION: "Question Mark",
    PunctClass.EXCLAMATION: "Exclamation Mark",
    PunctClass.HYPHEN: "Hyphen",
    PunctClass.ELLIPSIS: "Ellipsis",
}
_BY_CHAR = {v: k for k, v in _CHARS.items() if v}

MARK_CHARS = "".join(_BY_CHAR)
ELLIPSIS = _CHARS[PunctClass.ELLIPSIS]

_THREE_DOTS = re.compile(r"\.{3}")
_TIMESTAMP = re.compile(r"[0-9]+\Z")
_WHITESPACE = re.compile(r"\s")

TimedWord = namedtuple("TimedWord", ["text", "start_ms", "end_ms"])
RawDocument = namedtuple("RawDocument", ["doc_id", "words"])


class LabeledDocument(
    namedtuple("LabeledDocument", ["doc_id", "words", "labels"])):
  """ Word sequence with the punctuation class following each word. """

  __slots__ = ()

  def __new__(cls, doc_id, words, labels):
    words = tuple(words)
    labels = tuple(PunctClass(l) for l in labels)
    if len(words) != len(labels):
      exception.SHAPE_MISMATCH_EXCEPT("labels of document `{}`".format(doc_id),
                                      len(labels), len(words))
    return super(LabeledDocument, cls).__new__(cls, doc_id, words, labels)


def parse_timed_line(line, doc_id=""):
  """ Parse one in-file record into a RawDocument.

  Fields are separated by single spaces and shaped `token:start-end`. The
  token is split off at the last ":" so tokens holding a colon survive.

  :param line: One input record, line terminator optional.
  :param doc_id: Identifier stored on the document.
  :return: RawDocument.
  """
  line = line.rstrip("\r\n")
  if not line.strip():
    return RawDocument(doc_id, ())

  words = []
  for index, field in enumerate(line.strip().split(" ")):
    token, sep, span = field.rpartition(":")
    if not sep:
      exception.MALFORMED_FIELD_EXCEPT(index, field, "missing ':'")
    if not token:
      exception.MALFORMED_FIELD_EXCEPT(index, field, "empty token")
    if _WHITESPACE.search(token):
      exception.MALFORMED_FIELD_EXCEPT(index, field, "whitespace in token")
    start, dash, end = span.partition("-")
    if not dash:
      exception.MALFORMED_FIELD_EXCEPT(index, field, "missing '-'")
    if not _TIMESTAMP.match(start) or not _TIMESTAMP.match(end):
      exception.MALFORMED_FIELD_EXCEPT(index, field,
                                       "timestamps must be integers")
    start_ms, end_ms = int(start, 10), int(end, 10)
    if end_ms < start_ms:
      exception.MALFORMED_FIELD_EXCEPT(index, field, "end before start")
    words.append(TimedWord(token, start_ms, end_ms))
  return RawDocument(doc_id, tuple(words))


def strip_timestamps(doc):
  return " ".join(w.text for w in doc.words)


def normalize_ellipsis(text):
  """ Fold every group of three full stops into one ellipsis character.

  Runs of dots are consumed greedily from the left; one or two leftover
  dots stay as they are.

  :param text: Any text.
  :return: Normalized text.
  """
  return _THREE_DOTS.sub(ELLIPSIS, text)


def _match_prefix(token, word):
  """ Return the rest of `token` after `word`, or None if it does not start
  with it (case-insensitive). """
  head = token[:len(word)]
  if len(head) == len(word) and head.casefold() == word.casefold():
    return token[len(word):]
  return None


def _is_marks(text):
  return bool(text) and all(c in MARK_CHARS for c in text)


def align_gold(words, gold_text, doc_id=""):
  """ Derive per-word punctuation labels from golden text.

  Gold tokens are matched in order against the words; the marks trailing a
  matched token label that word. Only the first of several stacked marks is
  kept. Marks leading a token are ignored and tokens made only of marks
  attach to the preceding unlabeled word.

  :param words: Unpunctuated word strings.
  :param gold_text: Punctuated text, already passed through normalize_ellipsis.
  :param doc_id: Identifier stored on the document.
  :return: LabeledDocument.
  """
  words = tuple(words)
  tokens = gold_text.split()
  labels = [PunctClass.BLANK] * len(words)
  position = 0
  for token in tokens:
    if position < len(words):
      word = words[position]
      rest = _match_prefix(token, word)
      if rest is None and token[:1] in MARK_CHARS:
        rest = _match_prefix(token.lstrip(MARK_CHARS), word)
      if rest is not None and (not rest or _is_marks(rest)):
        if rest:
          labels[position] = PunctClass.from_char(rest[0])
          if len(rest) > 1:
            exception.DROPPED_MARK_WARN(rest[1:], word, position,
                                        "stacked marks keep the first one")
        position += 1
        continue
    if _is_marks(token):
      if position > 0 and labels[position - 1] is PunctClass.BLANK:
        labels[position - 1] = PunctClass.from_char(token[0])
        if len(token) > 1:
          exception.DROPPED_MARK_WARN(token[1:], words[position - 1],
                                      position - 1,
                                      "stacked marks keep the first one")
      else:
        exception.DROPPED_MARK_WARN(
            token, words[position - 1] if position else "<BOS>", position - 1,
            "no unlabeled word before it")
      continue
    if position >= len(words):
      exception.LENGTH_EXCEPT(
          len(words), len(tokens),
          "gold token `{}` has no word left to match".format(token))
    exception.ALIGNMENT_EXCEPT(position, words[position], token)

  if position < len(words):
    exception.LENGTH_EXCEPT(
        len(words), len(tokens),
        "gold text ends before word `{}` at position {}".format(
            words[position], position))
  return LabeledDocument(doc_id, words, labels)


def render_punctuated(doc):
  return " ".join(w + l.char for w, l in zip(doc.words, doc.labels))


def format_conll(doc):
  """ One `word<TAB>LABEL` line per word. """
  return "\n".join(
      "{}\t{}".format(w, l.name) for w, l in zip(doc.words, doc.labels))


def read_text_lines(path):
  """ Read a UTF-8 line-per-document file.

  :param path: File path.
  :return: List of lines without terminators.
  """
  with io.open(path, "r", encoding=common.ENCODING, newline="") as f:
    lines = f.read().split("\n")
  # only "\n" ends a record, U+2028 may occur inside a text
  if lines[-1] == "":
    lines.pop()
  return [l[:-1] if l.endswith("\r") else l for l in lines]


def write_text_lines(path, lines):
  with io.open(path, "w", encoding=common.ENCODING, newline="\n") as f:
    for line in lines:
      f.write(line + "\n")


def read_in_file(path):
  """ Parse an in-file, one RawDocument per line.

  :param path: In-file path.
  :return: List of RawDocument, doc_id being the 1-based line number.
  """
  docs = []
  for i, line in enumerate(read_text_lines(path)):
    try:
      docs.append(parse_timed_line(line, doc_id=str(i + 1)))
    except exception.PunctError as e:
      raise e.locate(path, i + 1)
  common.logger.debug("Read {} documents from {}.".format(len(docs), path))
  return docs


def align_text_lines(lines, in_docs, path=None):
  """ Normalize and align punctuated lines against parsed documents.

  :param lines: Punctuated texts, one per document.
  :param in_docs: RawDocuments the lines belong to.
  :param path: File the lines came from, used in error messages.
  :return: List of LabeledDocument.
  """
  if len(lines) != len(in_docs):
    exception.LINE_COUNT_EXCEPT(path or "punctuated text", len(lines),
                                len(in_docs))
  aligned = []
  for i, (line, doc) in enumerate(zip(lines, in_docs)):
    try:
      aligned.append(
          align_gold([w.text for w in doc.words],
                     normalize_ellipsis(line),
                     doc_id=doc.doc_id))
    except exception.PunctError as e:
      raise e.locate(path, i + 1)
  return aligned


def read_labeled_pair(in_path, expected_path):
  """ Read an in-file and its expected-file as gold labeled documents.

  :param in_path: In-file path.
  :param expected_path: Expected-file path.
  :return: List of LabeledDocument.
  """
  in_docs = read_in_file(in_path)
  return align_text_lines(read_text_lines(expected_path), in_docs,
                          expected_path)
