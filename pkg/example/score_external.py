from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

from punctkit.backend import load_external_predictions
from punctkit.corpus_io import read_in_file
from punctkit.corpus_io import read_labeled_pair
from punctkit.evaluator import evaluate
from punctkit.evaluator import format_report_kv

in_docs = read_in_file("dev/in.tsv")
gold = read_labeled_pair("dev/in.tsv", "dev/expected.tsv")
pred = load_external_predictions("dev/transformer_out.tsv", in_docs)  # any system's out-file
print(format_report_kv(evaluate(gold, pred)))
