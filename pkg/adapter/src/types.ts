export type Language = 'en' | 'fr'

export interface AdapterConfig {
  language: Language
  /** recorded in the sidecar header as `# pipeline = <name>@<version>` */
  pipeline: string
  batchSize: number
}

export const DEFAULT_PIPELINE = 'builtin-rules@1.0.0'

export function defaultConfig(language: Language): AdapterConfig {
  return { language, pipeline: DEFAULT_PIPELINE, batchSize: 128 }
}

export interface Token {
  /** 1-based position */
  index: number
  form: string
  lemma: string
  upos: string
  /** 0 for the root */
  head: number
  deprel: string
}

export interface SenseRef {
  senseId: string
  headword: string
  pos: string | null
  definition: string
}

export interface Diagnostic {
  sense_id: string
  warning: string
}
