//! Lexical normalization of noisy user-generated text.
//!
//! The crate learns normalization lexicons from word embeddings without
//! supervision: canonical words are mapped to the noisy variants that appear
//! among their nearest neighbors in embedding space, and each variant is
//! scored by a weighted blend of diacritic-aware lexical similarity and
//! cosine similarity. A trigram language model with modified Kneser-Ney
//! smoothing handles context-dependent (real-word) errors, and an expansion
//! step covers noisy forms the embedding vocabulary never saw.
//!
//! Module map:
//! - [`embedding`]: dense word vectors, cosine similarity, exact KNN search
//! - [`strsim`]: edit distance, LCS, diacritical symmetry, lexical similarity
//! - [`lexicon`]: canonical lexicons, lexicon learning, expansion, ensembles
//! - [`lm`]: modified Kneser-Ney trigram language model
//! - [`sgns`]: skip-gram trainer with negative sampling
//! - [`text`]: tokenization and corpus preprocessing
//! - [`normalize`]: the end-to-end normalization pipeline
//! - [`eval`]: recall evaluation against annotated gold samples
//! - [`fixture`]: synthetic corpus generator with known ground truth

pub mod config;
pub mod embedding;
pub mod error;
pub mod eval;
pub mod fixture;
pub mod lexicon;
pub mod lm;
pub mod normalize;
pub mod sgns;
pub mod strsim;
pub mod text;

pub use config::PipelineConfig;
pub use embedding::{EmbeddingModel, Neighbor};
pub use error::{Error, Result};
pub use eval::{AnnotatedSample, EvalReport};
pub use lexicon::{Candidate, CanonicalLexicon, NormalizationLexicon};
pub use lm::TrigramLM;
pub use normalize::{DecisionAction, DecisionSource, NormalizationDecision};
pub use strsim::SimilarityBreakdown;
pub use text::{Token, TokenKind, Variant};
