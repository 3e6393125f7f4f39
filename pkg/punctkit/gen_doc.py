#!/usr/bin/env python
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

import inspect
import io
import os
import re
import subprocess

import punctkit.backend
import punctkit.backend_rep
import punctkit.evaluator
import punctkit.trainer
from punctkit import common


def main(docs_dir):
  gen_api(docs_dir)
  gen_cli(docs_dir)


def parse_docstring(func):
  """ Split a `:param`/`:return` docstring into its parts. """
  doc = inspect.getdoc(func) or ""
  first_idx = doc.find(":param")
  if first_idx == -1:
    first_idx = doc.find(":return")
  description = doc if first_idx == -1 else doc[:first_idx]
  short, _, long_ = description.strip().partition("\n\n")
  ret = re.search(r":returns?:(.*)", doc, re.S)
  return {
      "short_description": " ".join(short.split()),
      "long_description": long_.strip(),
      "params": common.get_param_doc_dict([(func, {
          p: None
          for p in inspect.signature(func).parameters
          if p not in ("self", "cls")
      })]),
      "returns": " ".join(ret.group(1).split()) if ret else "",
  }


def gen_api(docs_dir):
  gen_doc_for = {
      'punctkit.backend': [
          punctkit.backend.prepare,
          punctkit.backend.predict,
          punctkit.backend.load_external_predictions,
      ],
      'punctkit.backend_rep.TaggerRep': [
          punctkit.backend_rep.TaggerRep.run,
          punctkit.backend_rep.TaggerRep.export_model,
      ],
      'punctkit.trainer': [
          punctkit.trainer.train,
      ],
      'punctkit.evaluator': [
          punctkit.evaluator.evaluate,
          punctkit.evaluator.evaluate_files,
      ],
  }
  with io.open(os.path.join(docs_dir, 'API.md'), 'w',
               encoding=common.ENCODING) as doc_file:
    doc_file.write('punctkit API\n')
    doc_file.write('======\n\n')

    for scope, funcs in sorted(gen_doc_for.items()):
      for func in funcs:
        doc_parsed = parse_docstring(func)
        doc_file.write('#### `' + scope + '.' + func.__name__ + '`\n\n')
        doc_file.write('<details>\n')
        doc_file.write('  <summary>')
        doc_file.write(doc_parsed['short_description'] + '\n\n')
        doc_file.write('  </summary>\n')
        doc_file.write(doc_parsed['long_description'] + '\n\n')
        doc_file.write('</details>\n\n\n\n')

        doc_file.write('_params_:\n\n')
        for name, param in doc_parsed['params'].items():
          doc_file.write('`' + name + '` : ' +
                         param['doc'].split(' (from ')[0] + '\n\n')

        doc_file.write('_returns_:\n\n')
        doc_file.write(doc_parsed['returns'] + '\n\n')


def gen_cli(docs_dir):
  with io.open(os.path.join(docs_dir, 'CLI_template.md'), 'r',
               encoding=common.ENCODING) as cli_temp_file:
    temp_lines = cli_temp_file.readlines()

  lines = []
  for line in temp_lines:
    matched = re.match(r"{punctkit.*}", line)
    if matched:
      command = matched.string.strip()[1:-1]
      output = subprocess.check_output(command.split(" ")).decode("UTF-8")
      lines.append(output)
    else:
      lines.append(line)

  with io.open(os.path.join(docs_dir, 'CLI.md'), 'w',
               encoding=common.ENCODING) as cli_file:
    cli_file.writelines(lines)


if __name__ == '__main__':
  base_dir = os.path.dirname(os.path.dirname(os.path.realpath(__file__)))
  docs_dir = os.path.join(base_dir, 'doc')
  main(docs_dir)
