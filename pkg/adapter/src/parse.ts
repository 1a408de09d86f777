/** Deterministic rule-based dependency attacher.
 *
 * The goal is a well-formed single-rooted tree with linguistically sensible
 * heads for dictionary-definition syntax (noun phrases with relative clauses,
 * to-infinitive verb definitions, coordinated adjectives).  Every non-root
 * token receives exactly one head; forward attachments always land on a token
 * of a different class whose own attachment is backward or root, so cycles
 * cannot arise.
 */

import { Language } from './types'

export interface TaggedToken {
  index: number
  form: string
  lemma: string
  upos: string
}

export interface Attachment {
  head: number
  deprel: string
}

const CONTENT = new Set(['NOUN', 'PROPN', 'VERB', 'ADJ', 'ADV', 'NUM', 'PRON'])

function findNext(tokens: TaggedToken[], from: number, want: Set<string>): number {
  for (let i = from + 1; i <= tokens.length; i++) {
    if (want.has(tokens[i - 1].upos)) return i
  }
  return 0
}

function findPrev(tokens: TaggedToken[], from: number, want: Set<string>): number {
  for (let i = from - 1; i >= 1; i--) {
    if (want.has(tokens[i - 1].upos)) return i
  }
  return 0
}

const NOUNS = new Set(['NOUN', 'PROPN'])
const VERBS = new Set(['VERB'])
const VERBS_ADJS = new Set(['VERB', 'ADJ'])
const ADJS = new Set(['ADJ'])
const ADVS = new Set(['ADV'])

function normalizePosHint(pos: string | null): string | null {
  if (!pos) return null
  const p = pos.toLowerCase()
  if (p.startsWith('adv') || p === 'r') return 'adv'
  if (p.startsWith('adj') || p === 'a' || p === 'j') return 'adj'
  if (p.startsWith('n')) return 'noun'
  if (p.startsWith('v')) return 'verb'
  return null
}

function chooseRoot(tokens: TaggedToken[], posHint: string | null): number {
  const first = tokens[0]
  // gerund-led definitions ("having a sharp edge ...") root at the gerund
  if (first.upos === 'VERB' && first.form.toLowerCase().endsWith('ing')) return 1
  const hint = normalizePosHint(posHint)
  const firstVerb = findNext(tokens, 0, VERBS)
  const firstNoun = findNext(tokens, 0, NOUNS)
  const firstAdj = findNext(tokens, 0, ADJS)
  const firstAdv = findNext(tokens, 0, ADVS)
  if (hint === 'verb' && firstVerb) return firstVerb
  if (hint === 'noun' && firstNoun) return firstNoun
  if (hint === 'adj' && firstAdj) return firstAdj
  if (hint === 'adv' && firstAdv) return firstAdv
  if (first.lemma === 'to' && firstVerb) return firstVerb
  if (firstNoun) return firstNoun
  const firstContent = findNext(tokens, 0, CONTENT)
  return firstContent || 1
}

export function attachHeads(
  language: Language,
  tokens: TaggedToken[],
  posHint: string | null,
): Attachment[] {
  const root = chooseRoot(tokens, posHint)
  const out: Attachment[] = tokens.map(() => ({ head: root, deprel: 'dep' }))

  for (const token of tokens) {
    const i = token.index
    if (i === root) {
      out[i - 1] = { head: 0, deprel: 'root' }
      continue
    }
    const prev = i >= 2 ? tokens[i - 2] : null
    let head = 0
    let deprel = 'dep'
    switch (token.upos) {
      case 'DET':
      case 'NUM': {
        head = findNext(tokens, i, NOUNS)
        deprel = token.upos === 'DET' ? 'det' : 'nummod'
        break
      }
      case 'ADJ': {
        head = findNext(tokens, i, NOUNS)
        deprel = head ? 'amod' : 'conj'
        break
      }
      case 'NOUN':
      case 'PROPN': {
        if (i < tokens.length && NOUNS.has(tokens[i].upos) && i + 1 !== root) {
          head = i + 1
          deprel = 'compound'
        } else {
          head = findPrev(tokens, i, VERBS)
          deprel = head ? 'obl' : 'nmod'
        }
        break
      }
      case 'VERB': {
        if (prev && (prev.upos === 'SCONJ' || prev.upos === 'PART')) {
          head = findPrev(tokens, i, VERBS)
          deprel = head ? 'advcl' : 'xcomp'
          if (!head) {
            head = findPrev(tokens, i, ADJS)
          }
        }
        if (!head) {
          head = findPrev(tokens, i, NOUNS)
          deprel = head ? 'acl' : 'conj'
        }
        if (!head) {
          head = findPrev(tokens, i, ADJS)
          deprel = 'xcomp'
        }
        break
      }
      case 'ADP': {
        head = findNext(tokens, i, NOUNS)
        deprel = 'case'
        if (!head) {
          head = findPrev(tokens, i, VERBS)
          deprel = 'mark'
        }
        break
      }
      case 'SCONJ': {
        head = findNext(tokens, i, VERBS)
        deprel = 'mark'
        if (!head) head = findNext(tokens, i, NOUNS)
        break
      }
      case 'PART': {
        head = findNext(tokens, i, VERBS_ADJS)
        deprel = token.lemma === 'to' ? 'mark' : 'advmod'
        break
      }
      case 'AUX': {
        head = findNext(tokens, i, VERBS_ADJS)
        deprel = head && tokens[head - 1].upos === 'ADJ' ? 'cop' : 'aux'
        break
      }
      case 'ADV': {
        head = findPrev(tokens, i, VERBS)
        deprel = 'advmod'
        if (!head) head = findNext(tokens, i, VERBS_ADJS)
        break
      }
      case 'PRON': {
        head = findNext(tokens, i, VERBS)
        deprel = 'nsubj'
        if (!head) {
          head = findPrev(tokens, i, NOUNS)
          deprel = 'nmod'
        }
        break
      }
      case 'CCONJ': {
        head = findNext(tokens, i, CONTENT)
        deprel = 'cc'
        break
      }
      default:
        head = 0
    }
    if (!head || head === i) {
      head = root
    }
    out[i - 1] = { head, deprel }
  }
  return out
}

/** Single root, no self-loops, every token reaches the root. */
export function isWellFormedTree(heads: number[]): boolean {
  const n = heads.length
  if (heads.filter((h) => h === 0).length !== 1) return false
  for (let i = 1; i <= n; i++) {
    if (heads[i - 1] === i || heads[i - 1] < 0 || heads[i - 1] > n) return false
  }
  for (let i = 1; i <= n; i++) {
    const seen = new Set<number>()
    let cur = i
    while (cur !== 0) {
      if (seen.has(cur)) return false
      seen.add(cur)
      cur = heads[cur - 1]
    }
  }
  return true
}
