"""Unicode normalisation for Arabic text."""
import re
import unicodedata

TASHKEEL = re.compile("[ً-ْ]")
TATWEEL = "ـ"
_ALEF_FOLD = str.maketrans({"أ": "ا", "إ": "ا", "آ": "ا"})

# runs of Arabic letters (hamza .. yeh, plus superscript alef) after stripping
ARABIC_WORD = re.compile("[ء-غف-يٰ-ۓ]+")


def normalize(text, fold_alef=False):
    """NFC, then drop short vowels and tatweel.

    Alef variants are kept unless ``fold_alef`` is set, since clitic
    matching needs the hamza forms (أ is the interrogative proclitic).
    """
    text = unicodedata.normalize("NFC", text)
    text = TASHKEEL.sub("", text).replace(TATWEEL, "")
    # NFC may have composed alef+hamza; stripping cannot break that, but a
    # second NFC keeps the function idempotent on odd inputs
    text = unicodedata.normalize("NFC", text)
    if fold_alef:
        text = text.translate(_ALEF_FOLD)
    return text


def fold(text):
    return normalize(text, fold_alef=True)


def arabic_tokens(text, fold_alef=False):
    """Split running text into normalised Arabic word tokens."""
    return ARABIC_WORD.findall(normalize(text, fold_alef))
