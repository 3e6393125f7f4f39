from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

from punctkit.backend import prepare
from punctkit.corpus_io import read_in_file
from punctkit.corpus_io import read_labeled_pair
from punctkit.corpus_io import render_punctuated
from punctkit.corpus_io import write_text_lines
from punctkit.evaluator import evaluate_files
from punctkit.evaluator import format_report_table
from punctkit.trainer import train

corpus = read_labeled_pair("train/in.tsv", "train/expected.tsv")
model = train(corpus, epochs=5, seed=42)  # averaged perceptron tagger
rep = prepare(model, chunk_size=100, overlap=20)
rep.export_model("model.tsv")

labeled = rep.run_all(read_in_file("dev/in.tsv"))
write_text_lines("dev/out.tsv", [render_punctuated(doc) for doc in labeled])

report = evaluate_files("dev/expected.tsv", "dev/out.tsv", "dev/in.tsv")
print(format_report_table(report))
