import { Token } from './types'

/** Render one sentence block with its `# sense_id` comment. */
export function renderBlock(senseId: string, tokens: Token[]): string {
  const lines = [`# sense_id = ${senseId}`]
  for (const t of tokens) {
    lines.push(
      [t.index, t.form, t.lemma, t.upos, '_', '_', t.head, t.deprel, '_', '_'].join('\t'),
    )
  }
  return lines.join('\n') + '\n\n'
}

export interface ParsedSidecar {
  /** sense_id -> number of blocks seen (duplicates show up as > 1) */
  blockCounts: Map<string, number>
}

/** Minimal sidecar scan used by the validation report. */
export function scanSidecar(text: string): ParsedSidecar {
  const blockCounts = new Map<string, number>()
  for (const line of text.split('\n')) {
    const match = line.match(/^#\s*sense_id\s*=\s*(.+?)\s*$/)
    if (match) {
      blockCounts.set(match[1], (blockCounts.get(match[1]) ?? 0) + 1)
    }
  }
  return { blockCounts }
}
