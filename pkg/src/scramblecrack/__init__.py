"""Cryptanalysis workbench for a sort-based scrambling + Vigenere image cipher."""
from .cipher import EquivalentKey, decrypt, encrypt, mod_add, mod_sub
from .cpa import optimal_cpa, recover_mask, zhang_method1, zhang_method2
from .errors import (
    AmbiguousDifference,
    BadHeader,
    BadKeyFile,
    BadMagic,
    InsufficientPairs,
    InvalidIndex,
    InvalidKey,
    LengthMismatch,
    NonFiniteOrbit,
    TruncatedPixels,
    UnsupportedMaxval,
    WorkbenchError,
)
from .image_io import GrayImage, from_sequence, load_pgm, read_pgm, save_pgm, to_sequence, write_pgm
from .keystream import PAPER_KEY, Keystreams, SecretKey, derive_keystreams, iterate_map, sort_to_index
from .kpa import compute_sdm, kpa_attack, min_known_images, sdm_invariance_check, success_threshold
from .metrics import difference_image, histogram, recovery_rate
from .oracle import EncryptionOracle, KnownPair

__version__ = "0.1.0"
