/** Rule lemmatizers.
 *
 * English: irregular-form table plus the usual -s/-es/-ies/-ing/-ed suffix
 * rules.  French: plural -s/-x stripping, -aux -> -al, and a table for the
 * high-frequency irregular verb forms.  Both are deterministic and
 * lexicon-free.
 */

const EN_IRREGULAR: Record<string, string> = {
  am: 'be', is: 'be', are: 'be', was: 'be', were: 'be', been: 'be', being: 'be',
  "isn't": 'be', "aren't": 'be',
  has: 'have', had: 'have', having: 'have', "hasn't": 'have',
  does: 'do', did: 'do', done: 'do', doing: 'do',
  "don't": 'do', "doesn't": 'do', "didn't": 'do',
  goes: 'go', went: 'go', gone: 'go', going: 'go',
  gave: 'give', given: 'give', giving: 'give',
  made: 'make', making: 'make',
  took: 'take', taken: 'take', taking: 'take',
  came: 'come', coming: 'come',
  got: 'get', gotten: 'get', getting: 'get',
  saw: 'see', seen: 'see', seeing: 'see',
  said: 'say', saying: 'say',
  found: 'find', finding: 'find',
  kept: 'keep', keeping: 'keep',
  left: 'leave', leaving: 'leave',
  felt: 'feel', feeling: 'feel',
  held: 'hold', holding: 'hold',
  sent: 'send', sending: 'send',
  used: 'use', using: 'use',
  lives: 'live', lived: 'live', living: 'live',
  moved: 'move', moving: 'move',
  wrote: 'write', written: 'write', writing: 'write',
  grew: 'grow', grown: 'grow', growing: 'grow',
  ate: 'eat', eaten: 'eat', eating: 'eat',
  wore: 'wear', worn: 'wear', wearing: 'wear',
  drank: 'drink', drunk: 'drink', drinking: 'drink',
  became: 'become', becoming: 'become',
  bought: 'buy', buying: 'buy',
  sold: 'sell', selling: 'sell',
  built: 'build', building: 'build',
  cutting: 'cut', putting: 'put',
  ran: 'run', running: 'run',
  sat: 'sit', sitting: 'sit',
  lay: 'lie', lying: 'lie',
  children: 'child', men: 'man', women: 'woman', people: 'person',
  feet: 'foot', teeth: 'tooth', mice: 'mouse',
  better: 'good', best: 'good', worse: 'bad', worst: 'bad',
  "can't": 'can', cannot: 'can', "won't": 'will',
  died: 'die', tied: 'tie', lied: 'lie', agreed: 'agree',
  closing: 'close', closed: 'close',
  buses: 'bus', gases: 'gas', tomatoes: 'tomato', potatoes: 'potato',
  heroes: 'hero', echoes: 'echo',
}

// inflected-looking forms that are their own lemma
const EN_KEEP = new Set([
  'series', 'species', 'news', 'physics', 'politics', 'mathematics',
  'gas', 'yes', 'always', 'perhaps', 'sometimes', 'towards', 'lens',
  'during', 'thing', 'something', 'anything', 'nothing', 'everything',
  'morning', 'evening', 'ceiling', 'king', 'ring', 'wing', 'spring',
  'string', 'clothing', 'wedding', 'pudding',
  'hundred', 'naked', 'sacred', 'wicked', 'tired', 'indeed',
])

const VOWELS = new Set(['a', 'e', 'i', 'o', 'u'])
const ES_STRIP = ['ches', 'shes', 'xes', 'zes', 'sses']

function dedouble(stem: string): string {
  const last = stem[stem.length - 1]
  if (
    stem.length >= 3 &&
    last === stem[stem.length - 2] &&
    !VOWELS.has(last) &&
    !'lsz'.includes(last)
  ) {
    return stem.slice(0, -1)
  }
  return stem
}

function restoreE(stem: string): string {
  if (/(?:v|u|c|bl|iz)$/.test(stem)) return stem + 'e'
  if (stem.endsWith('at') && stem.length >= 3 && !VOWELS.has(stem[stem.length - 3])) {
    return stem + 'e'
  }
  return stem
}

export function lemmatizeEn(token: string): string {
  let word = token.toLowerCase()
  if (word.endsWith("'s") || word.endsWith('’s')) word = word.slice(0, -2)
  if (word in EN_IRREGULAR) return EN_IRREGULAR[word]
  if (EN_KEEP.has(word)) return word
  if (word.endsWith('ies') && word.length >= 5) return word.slice(0, -3) + 'y'
  if (ES_STRIP.some((s) => word.endsWith(s))) return word.slice(0, -2)
  if (
    word.endsWith('s') &&
    word.length >= 4 &&
    !word.endsWith('ss') &&
    !word.endsWith('us') &&
    !word.endsWith('is')
  ) {
    return word.slice(0, -1)
  }
  if (word.endsWith('ing') && word.length >= 6) {
    const stem = word.slice(0, -3)
    if (stem.endsWith('e')) return stem
    return restoreE(dedouble(stem))
  }
  if (word.endsWith('eed')) return word
  if (word.endsWith('ied') && word.length >= 5) return word.slice(0, -3) + 'y'
  if (word.endsWith('ed') && word.length >= 5) {
    const stem = word.slice(0, -2)
    if (stem.endsWith('e')) return stem
    return restoreE(dedouble(stem))
  }
  return word
}

const FR_IRREGULAR: Record<string, string> = {
  est: 'être', sont: 'être', était: 'être', étaient: 'être', été: 'être',
  suis: 'être', es: 'être', êtes: 'être', sommes: 'être',
  a: 'avoir', ont: 'avoir', avait: 'avoir', avaient: 'avoir', ayant: 'avoir', eu: 'avoir',
  fait: 'faire', font: 'faire', faisait: 'faire', faisant: 'faire',
  va: 'aller', vont: 'aller', allait: 'aller', allant: 'aller',
  peut: 'pouvoir', peuvent: 'pouvoir', pouvait: 'pouvoir',
  doit: 'devoir', doivent: 'devoir',
  sert: 'servir', servent: 'servir',
  vit: 'vivre', vivent: 'vivre',
  prend: 'prendre', prennent: 'prendre',
  yeux: 'oeil', chevaux: 'cheval', animaux: 'animal', journaux: 'journal',
  eaux: 'eau',
}

export function lemmatizeFr(token: string): string {
  let word = token.toLowerCase()
  if (word.startsWith("l'") || word.startsWith("d'") || word.startsWith("qu'")) {
    word = word.slice(word.indexOf("'") + 1)
  }
  if (word in FR_IRREGULAR) return FR_IRREGULAR[word]
  if (word.endsWith('aux') && word.length >= 5) return word.slice(0, -3) + 'al'
  if (word.endsWith('eux') && word.length >= 5) return word
  if (word.endsWith('x') && word.length >= 4) return word.slice(0, -1)
  if (word.endsWith('s') && word.length >= 4 && !word.endsWith('ss')) {
    return word.slice(0, -1)
  }
  return word
}

export function lemmatize(language: 'en' | 'fr', token: string): string {
  return language === 'en' ? lemmatizeEn(token) : lemmatizeFr(token)
}
