/** Word tokenizer shared by both languages: letter runs with internal
 * hyphens/apostrophes, plus digit runs.  Punctuation is not emitted. */

const WORD_RE = /\p{L}+(?:['’-]\p{L}+)*|\d+/gu

export function tokenizeWords(text: string): string[] {
  return text.match(WORD_RE) ?? []
}
