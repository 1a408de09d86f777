"""skbforge: build sememe knowledge bases from dictionaries with a controlled
defining vocabulary, distill them via dependency importance, evaluate their
annotation consistency, and answer substitution queries."""

__version__ = "0.1.0"

from .consistency import (
    EvalConfig,
    EvalReport,
    average_precision,
    evaluate_consistency,
    f1_of,
    predict_sememes,
    select_predicted,
    split_holdout,
)
from .extract import (
    DistillConfig,
    ImportanceScores,
    build_skb,
    distill_sense,
    distill_skb,
    extract_sense_sememes,
    importance_scores,
    lemmatize,
    normalize_definition,
)
from .formats import (
    EmbeddingTable,
    WordList,
    parse_conllu,
    parse_dictionary,
    parse_embeddings,
    parse_wordlist,
    read_skb,
    write_skb,
)
from .lexicon import (
    DictionaryEntry,
    Sense,
    SememeInventory,
    Skb,
    SkbRecord,
    SkbStats,
    TokenAnnotation,
    compute_stats,
    effective_inventory,
    insert_record,
    make_lemma,
)
from .sememe_set import (
    FrequencyTable,
    SememeSetConfig,
    build_sememe_set,
    count_defining_frequencies,
    filter_stopwords,
    trim_by_frequency,
)
from .substitution import (
    SubstitutionIndex,
    build_index,
    sememe_key,
    substitute_stats,
    substitutes,
)
