/** Closed-class lexicons plus suffix heuristics give each token a UPOS tag.
 * Open-class tokens default to NOUN; verb detection leans on the lemmatizer's
 * verb lemmas and on syntactic cues handled later in the parser. */

import { Language } from './types'

const EN_TAGS: Record<string, string> = {}
function enClass(tag: string, words: string) {
  for (const w of words.split(' ')) EN_TAGS[w] = tag
}
enClass('DET', 'a an the this these those each every some any no all both another such')
enClass('PRON', 'that which who whom whose it its you your someone something anyone anything nothing everything one ones they them he she we i')
enClass('ADP', 'of in on at with by from into onto over under through between near against about around across')
enClass('PART', 'to not')
enClass('AUX', "is are was were be been being am have has had do does did can could will would may might must should shall")
enClass('CCONJ', 'and or but nor')
enClass('SCONJ', 'if because while when where although for as than')
enClass('ADV', 'very too also often usually never always sometimes quite rather extremely almost together here there')
enClass('NUM', 'one two three four five six seven eight nine ten hundred thousand million')

// common defining verbs, base forms; 3sg/-ing/-ed variants reduce to these
const EN_VERB_LEMMAS = new Set((
  'be have do go give make take come get see say find keep leave feel hold ' +
  'send use live move write grow eat wear drink become buy sell build cut put ' +
  'run sit lie work play carry cover produce clean open close push pull throw ' +
  'catch burn float mean cause let help show describe express look'
).split(' '))

// common adjectives that carry no marking suffix
const EN_ADJ_LEMMAS = new Set((
  'good great bad big small large long short high low hot cold warm cool new ' +
  'old young wild soft hard heavy light quick slow fast sweet dark bright thin ' +
  'thick flat round sharp smooth rough deep red green blue white black same ' +
  'different important nice free full strong weak wet dry early late easy'
).split(' '))

const EN_ADJ_SUFFIXES = ['ful', 'ous', 'ive', 'able', 'ible', 'ish', 'less']

const FR_TAGS: Record<string, string> = {}
function frClass(tag: string, words: string) {
  for (const w of words.split(' ')) FR_TAGS[w] = tag
}
frClass('DET', 'le la les un une des du de ce cette ces son sa ses leur leurs')
frClass('PRON', 'qui que quoi il elle ils elles on nous vous je tu cela ça')
frClass('ADP', 'à dans sur pour avec par sans sous vers chez entre')
frClass('AUX', 'est sont était étaient être suis sommes êtes a ont avait avaient avoir')
frClass('CCONJ', 'et ou mais ni')
frClass('SCONJ', 'si quand lorsque comme parce')
frClass('ADV', 'très aussi souvent toujours jamais plus moins bien mal ne pas')
frClass('PART', "ne pas")

const FR_VERB_SUFFIXES = ['er', 'ir', 'oir', 're']

export interface TagContext {
  /** lemma of the token, from the language's lemmatizer */
  lemma: string
  prev: string | null
  prevPrev: string | null
}

export function tagToken(language: Language, form: string, ctx: TagContext): string {
  const word = form.toLowerCase()
  if (/^\d+$/.test(word)) return 'NUM'
  if (language === 'en') {
    if (word in EN_TAGS) return EN_TAGS[word]
    if (EN_ADJ_LEMMAS.has(word)) return 'ADJ'
    if (EN_VERB_LEMMAS.has(ctx.lemma)) return 'VERB'
    if (word.endsWith('ly')) return 'ADV'
    // gerunds after a marker, or 3sg after a relativizer, read as verbal
    if (word.endsWith('ing') && (ctx.prev === 'for' || ctx.prev === 'by')) return 'VERB'
    if (word.endsWith('s') && (ctx.prev === 'that' || ctx.prev === 'which' || ctx.prev === 'who')) {
      return 'VERB'
    }
    if (EN_ADJ_SUFFIXES.some((s) => word.endsWith(s)) && word.length >= 5) return 'ADJ'
    return 'NOUN'
  }
  if (word in FR_TAGS) return FR_TAGS[word]
  if (word.endsWith('ment') && word.length >= 6) return 'ADV'
  if (FR_VERB_SUFFIXES.some((s) => word.endsWith(s)) && word.length >= 4) return 'VERB'
  return 'NOUN'
}
