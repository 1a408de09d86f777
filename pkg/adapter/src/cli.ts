#!/usr/bin/env node
/** skb-annotate: convert dictionary JSONL into a CoNLL-U sidecar.
 *
 * Exit codes mirror the consumer toolkit: 0 success, 1 I/O error,
 * 2 validation error.
 */

import { readFileSync, writeFileSync } from 'fs'
import { Command } from 'commander'

import { annotate, MalformedInput, UnsupportedLanguage, validate } from './annotate'
import { AdapterConfig, DEFAULT_PIPELINE, Language } from './types'

const program = new Command()
program
  .name('skb-annotate')
  .description('Batch NLP annotation: dictionary JSONL in, CoNLL-U sidecar out')
  .version('1.0.0')

function fail(message: string, code: 1 | 2): never {
  process.stderr.write(`error: ${message}\n`)
  process.exit(code)
}

function readInput(path: string): string {
  try {
    return readFileSync(path, 'utf-8')
  } catch (e) {
    fail((e as Error).message, 1)
  }
}

program
  .command('annotate')
  .description('tokenize, lemmatize, tag, and parse every sense definition')
  .requiredOption('--lang <language>', 'en or fr')
  .requiredOption('--in <path>', 'dictionary JSONL')
  .requiredOption('--out <path>', 'CoNLL-U sidecar to write')
  .option('--diagnostics <path>', 'JSONL file for per-sense warnings')
  .option('--batch-size <n>', 'senses per batch', '128')
  .option('--pipeline <name>', 'pipeline identifier for the header', DEFAULT_PIPELINE)
  .action((opts) => {
    const cfg: AdapterConfig = {
      language: opts.lang as Language,
      pipeline: opts.pipeline,
      batchSize: Math.max(1, parseInt(opts.batchSize, 10) || 128),
    }
    const text = readInput(opts.in)
    let result
    try {
      result = annotate(cfg, text)
    } catch (e) {
      if (e instanceof UnsupportedLanguage || e instanceof MalformedInput) {
        fail(e.message, 2)
      }
      throw e
    }
    try {
      writeFileSync(opts.out, result.conllu, 'utf-8')
      if (opts.diagnostics) {
        writeFileSync(
          opts.diagnostics,
          result.diagnostics.map((d) => JSON.stringify(d)).join('\n') +
            (result.diagnostics.length ? '\n' : ''),
          'utf-8',
        )
      }
    } catch (e) {
      fail((e as Error).message, 1)
    }
    process.stderr.write(
      `annotated ${result.annotated} senses (${result.diagnostics.length} skipped) -> ${opts.out}\n`,
    )
  })

program
  .command('validate')
  .description('report sidecar coverage against the dictionary')
  .requiredOption('--in <path>', 'CoNLL-U sidecar')
  .requiredOption('--dict <path>', 'dictionary JSONL')
  .action((opts) => {
    const sidecar = readInput(opts.in)
    const dict = readInput(opts.dict)
    let report
    try {
      report = validate(sidecar, dict)
    } catch (e) {
      if (e instanceof MalformedInput) fail(e.message, 2)
      throw e
    }
    process.stdout.write(JSON.stringify(report, Object.keys(report).sort()) + '\n')
  })

program.parse()
