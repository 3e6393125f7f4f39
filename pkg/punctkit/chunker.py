"""Overlapping word windows for bounded-context prediction.

Each window keeps only the predictions of its central part; the kept parts
of consecutive windows tile the document without gap or overlap.
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

from collections import namedtuple
import numbers

import punctkit.common as common
from punctkit.common import exception

DEFAULT_CHUNK_SIZE = 100
DEFAULT_OVERLAP = 20

ChunkConfig = namedtuple("ChunkConfig", ["chunk_size", "overlap"])
ChunkConfig.__new__.__defaults__ = (DEFAULT_CHUNK_SIZE, DEFAULT_OVERLAP)


class Chunk(
    namedtuple("Chunk", ["doc_id", "begin", "end", "keep_begin", "keep_end"])):
  __slots__ = ()

  @property
  def word_span(self):
    return (self.begin, self.end)

  @property
  def keep_span(self):
    return (self.keep_begin, self.keep_end)

  @property
  def size(self):
    return self.end - self.begin


def check_chunk_config(chunk_size, overlap):
  """ Raise BadConfig unless the window parameters are usable.

  :param chunk_size: Window length in words, at least 1.
  :param overlap: Words shared by consecutive windows, less than half the
    window length.
  """
  if not isinstance(chunk_size, numbers.Integral) or chunk_size < 1:
    exception.BAD_CONFIG_EXCEPT("chunk_size", chunk_size, "must be >= 1")
  if not isinstance(overlap,
                    numbers.Integral) or overlap < 0 or overlap >= chunk_size:
    exception.BAD_CONFIG_EXCEPT("overlap", overlap,
                                "must be in [0, chunk_size)")
  if 2 * overlap >= chunk_size:
    exception.BAD_CONFIG_EXCEPT("overlap", overlap,
                                "twice the overlap must be below chunk_size")


def make_chunks(word_count, chunk_size=DEFAULT_CHUNK_SIZE,
                overlap=DEFAULT_OVERLAP, doc_id=""):
  """ Lay windows over a document of `word_count` words.

  Windows advance by chunk_size - overlap. Each keeps its predictions after
  trimming overlap // 2 words on the left and the rest of the overlap on the
  right; the first window is not trimmed on the left and the last one keeps
  through the end of the document.

  :param word_count: Number of words in the document.
  :param chunk_size: Window length in words.
  :param overlap: Words shared by consecutive windows.
  :param doc_id: Identifier stored on each chunk.
  :return: List of Chunk.
  """
  check_chunk_config(chunk_size, overlap)
  if word_count < 0:
    exception.BAD_CONFIG_EXCEPT("word_count", word_count, "must be >= 0")
  if word_count == 0:
    return []
  if word_count <= chunk_size:
    return [Chunk(doc_id, 0, word_count, 0, word_count)]

  stride = chunk_size - overlap
  left_trim = overlap // 2
  right_trim = overlap - left_trim
  chunks = []
  begin = 0
  while True:
    end = min(begin + chunk_size, word_count)
    keep_begin = begin + left_trim if chunks else 0
    if end == word_count:
      chunks.append(Chunk(doc_id, begin, end, keep_begin, word_count))
      break
    chunks.append(Chunk(doc_id, begin, end, keep_begin, end - right_trim))
    begin += stride
  common.logger.debug("Document `{}`: {} words in {} chunks.".format(
      doc_id, word_count, len(chunks)))
  return chunks


def stitch(chunks, per_chunk_labels):
  """ Merge per-chunk predictions into one label per word.

  :param chunks: Chunks of one document, as returned by make_chunks.
  :param per_chunk_labels: One label sequence per chunk, covering its window.
  :return: List of labels, one per document word.
  """
  if len(chunks) != len(per_chunk_labels):
    exception.SHAPE_MISMATCH_EXCEPT("chunk predictions", len(per_chunk_labels),
                                    len(chunks))
  labels = []
  for chunk, chunk_labels in zip(chunks, per_chunk_labels):
    if len(chunk_labels) != chunk.size:
      exception.SHAPE_MISMATCH_EXCEPT(
          "predictions of chunk {}".format(chunk.word_span), len(chunk_labels),
          chunk.size)
    if chunk.keep_begin != len(labels):
      exception.SHAPE_MISMATCH_EXCEPT(
          "stitched prefix before chunk {}".format(chunk.word_span),
          len(labels), chunk.keep_begin)
    labels.extend(chunk_labels[chunk.keep_begin - chunk.begin:chunk.keep_end -
                               chunk.begin])
  return labels
