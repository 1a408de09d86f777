/** The annotation pipeline: dictionary JSONL in, CoNLL-U sidecar out.
 *
 * Senses are annotated independently in batches and the output blocks are
 * sorted by sense_id, so the result is deterministic for a fixed pipeline
 * version regardless of batching.  Per-sense failures become diagnostics,
 * never a crashed run.
 */

import { renderBlock, scanSidecar } from './conllu'
import { lemmatize } from './lemmatize'
import { attachHeads, isWellFormedTree, TaggedToken } from './parse'
import { tagToken } from './tag'
import { tokenizeWords } from './tokenize'
import { AdapterConfig, Diagnostic, SenseRef, Token } from './types'

export class UnsupportedLanguage extends Error {}

export class MalformedInput extends Error {
  constructor(message: string, readonly line: number) {
    super(`line ${line}: ${message}`)
  }
}

export function parseDictionaryJsonl(text: string): SenseRef[] {
  const senses: SenseRef[] = []
  const lines = text.split('\n')
  for (let n = 1; n <= lines.length; n++) {
    const line = lines[n - 1].trim()
    if (!line) continue
    let obj: any
    try {
      obj = JSON.parse(line)
    } catch (e) {
      throw new MalformedInput(`invalid JSON: ${(e as Error).message}`, n)
    }
    if (typeof obj?.headword !== 'string' || !Array.isArray(obj?.senses)) {
      throw new MalformedInput('expected {"headword", "pos", "senses"}', n)
    }
    for (const s of obj.senses) {
      if (typeof s?.id !== 'string' || typeof s?.definition !== 'string') {
        throw new MalformedInput('each sense needs "id" and "definition"', n)
      }
      senses.push({
        senseId: s.id,
        headword: obj.headword,
        pos: obj.pos ?? null,
        definition: s.definition,
      })
    }
  }
  return senses
}

export function annotateSense(cfg: AdapterConfig, sense: SenseRef): Token[] {
  const forms = tokenizeWords(sense.definition)
  if (forms.length === 0) {
    throw new Error('definition has no word tokens')
  }
  const tagged: TaggedToken[] = forms.map((form, idx) => {
    const lemma = lemmatize(cfg.language, form)
    const upos = tagToken(cfg.language, form, {
      lemma,
      prev: idx > 0 ? forms[idx - 1].toLowerCase() : null,
      prevPrev: idx > 1 ? forms[idx - 2].toLowerCase() : null,
    })
    return { index: idx + 1, form, lemma, upos }
  })
  const attachments = attachHeads(cfg.language, tagged, sense.pos)
  const tokens: Token[] = tagged.map((t, i) => ({
    ...t,
    head: attachments[i].head,
    deprel: attachments[i].deprel,
  }))
  if (!isWellFormedTree(tokens.map((t) => t.head))) {
    throw new Error('attachment produced a malformed tree')
  }
  return tokens
}

export interface AnnotateResult {
  conllu: string
  annotated: number
  diagnostics: Diagnostic[]
}

export function annotate(cfg: AdapterConfig, dictJsonl: string): AnnotateResult {
  if (cfg.language !== 'en' && cfg.language !== 'fr') {
    throw new UnsupportedLanguage(`unsupported language "${cfg.language}"`)
  }
  const senses = parseDictionaryJsonl(dictJsonl)
  const blocks: Array<[string, string]> = []
  const diagnostics: Diagnostic[] = []
  for (let start = 0; start < senses.length; start += cfg.batchSize) {
    for (const sense of senses.slice(start, start + cfg.batchSize)) {
      try {
        blocks.push([sense.senseId, renderBlock(sense.senseId, annotateSense(cfg, sense))])
      } catch (e) {
        diagnostics.push({ sense_id: sense.senseId, warning: (e as Error).message })
      }
    }
  }
  blocks.sort((a, b) => (a[0] < b[0] ? -1 : a[0] > b[0] ? 1 : 0))
  const header = `# pipeline = ${cfg.pipeline}\n# language = ${cfg.language}\n`
  return {
    conllu: header + blocks.map(([, b]) => b).join(''),
    annotated: blocks.length,
    diagnostics,
  }
}

export interface ValidationReport {
  senses: number
  annotated: number
  coverage: number
  missing: string[]
  duplicated: string[]
  unknown: string[]
}

/** Coverage report: every dictionary sense appears at most once in the sidecar. */
export function validate(sidecar: string, dictJsonl: string): ValidationReport {
  const senses = parseDictionaryJsonl(dictJsonl)
  const ids = new Set(senses.map((s) => s.senseId))
  const { blockCounts } = scanSidecar(sidecar)
  const missing = [...ids].filter((id) => !blockCounts.has(id)).sort()
  const duplicated = [...blockCounts.entries()]
    .filter(([, n]) => n > 1)
    .map(([id]) => id)
    .sort()
  const unknown = [...blockCounts.keys()].filter((id) => !ids.has(id)).sort()
  const annotated = ids.size - missing.length
  return {
    senses: ids.size,
    annotated,
    coverage: ids.size ? annotated / ids.size : 1.0,
    missing,
    duplicated,
    unknown,
  }
}
