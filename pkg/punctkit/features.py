"""Context-window feature templates of the linear tagger.

Every key is a `template@offset=value` string, or `template=value` for
templates without an offset:

  bias                    constant feature
  word@k                  lowercased word at offset k, k in [-r, +r]
  suffix1@0 .. suffix3@0  last one to three characters of the focus word
  position                `last` for the final word of the window, else `inner`
  nextcap@+1              1 when the next word starts with a capital letter
  pause@0                 bucketed gap to the next word (only when enabled)

Words outside the window read as <PAD>. A key depends on words at most
max(r, 1) positions away from the focus word.
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

import bisect
from collections import namedtuple

from punctkit.common import exception

PAD = "<PAD>"
DEFAULT_CONTEXT_RADIUS = 2
DEFAULT_BUCKET_EDGES_MS = (100, 250, 500, 1000)

PauseFeatureConfig = namedtuple("PauseFeatureConfig",
                                ["enabled", "bucket_edges_ms"])
PauseFeatureConfig.__new__.__defaults__ = (False, DEFAULT_BUCKET_EDGES_MS)


def check_context_radius(context_radius):
  if int(context_radius) != context_radius or context_radius < 1:
    exception.BAD_CONFIG_EXCEPT("context_radius", context_radius,
                                "must be an integer >= 1")


def check_pause_config(config):
  edges = list(config.bucket_edges_ms)
  if not edges or any(int(e) != e for e in edges) or \
      any(a >= b for a, b in zip(edges, edges[1:])):
    exception.BAD_CONFIG_EXCEPT("pause_buckets", edges,
                                "must be ascending integers")


def pause_bucket(gap_ms, bucket_edges_ms):
  """ Name the bucket a gap falls into, e.g. `<100`, `100-250` or `>=1000`. """
  edges = list(bucket_edges_ms)
  i = bisect.bisect_right(edges, gap_ms)
  if i == 0:
    return "<{}".format(edges[0])
  if i == len(edges):
    return ">={}".format(edges[-1])
  return "{}-{}".format(edges[i - 1], edges[i])


def _offset(k):
  return "0" if k == 0 else "{:+d}".format(k)


def extract_features(words,
                     timestamps,
                     position,
                     config=None,
                     context_radius=DEFAULT_CONTEXT_RADIUS):
  """ Feature keys of the word at `position`.

  :param words: Word strings of the window.
  :param timestamps: (start_ms, end_ms) pairs parallel to words, or None.
  :param position: Index of the focus word.
  :param config: PauseFeatureConfig; pause features are off by default.
  :param context_radius: Number of neighbours read on each side.
  :return: Tuple of feature keys in template order.
  """
  n = len(words)
  if not 0 <= position < n:
    exception.INDEX_EXCEPT(position, n)
  config = config or PauseFeatureConfig()
  word = words[position]
  lower = word.lower()

  features = ["bias"]
  for k in range(-context_radius, context_radius + 1):
    j = position + k
    features.append("word@{}={}".format(_offset(k),
                                        words[j].lower() if 0 <= j < n else PAD))
  for size in (1, 2, 3):
    features.append("suffix{}@0={}".format(size, lower[-size:]))

  last = position == n - 1
  features.append("position={}".format("last" if last else "inner"))
  features.append("nextcap@+1={}".format(
      PAD if last else int(words[position + 1][:1].isupper())))

  if config.enabled and timestamps is not None:
    if last:
      features.append("pause@0={}".format(PAD))
    else:
      gap = timestamps[position + 1][0] - timestamps[position][1]
      features.append("pause@0={}".format(
          pause_bucket(gap, config.bucket_edges_ms)))
  return tuple(features)
