"""Rule-based English to Arabic transfer translation with Arabic
morphological analysis, lemma-based retrieval and BLEU scoring."""
from .analyzer import analyze, lemmatize, segment
from .generator import conjugate, inflect_noun
from .lexicon import load_lexicon
from .pipeline import analyze_arabic, translate

__version__ = "0.1.0"

__all__ = ["analyze", "analyze_arabic", "conjugate", "inflect_noun", "lemmatize",
           "load_lexicon", "segment", "translate"]
