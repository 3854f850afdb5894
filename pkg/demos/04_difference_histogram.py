"""
Histogram of the difference of two cipher-images
================================================

Under one key the difference of two cipher-images is the difference of the
plain-images with its pixels moved around, so it is far from uniform. That
breaks the uniformity assumption behind the known-image threshold.
Writes ``value,count`` CSV and, if matplotlib is around, a bar plot.
"""
import sys
from pathlib import Path

import numpy as np

from scramblecrack import PAPER_KEY, derive_keystreams, difference_image, encrypt, histogram
from scramblecrack.metrics import histogram_csv
from scramblecrack.testimages import load_test_image

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_out")
out.mkdir(exist_ok=True)

a, b = load_test_image("camera"), load_test_image("astronaut")
ks = derive_keystreams(PAPER_KEY, a.size)
counts = histogram(difference_image(encrypt(a.pixels, ks), encrypt(b.pixels, ks)))
assert np.array_equal(counts, histogram(difference_image(a.pixels, b.pixels)))

(out / "cipher_difference_hist.csv").write_text(histogram_csv(counts))
print("most common difference values:", np.argsort(counts)[::-1][:5])
print("max/min bin ratio:", counts.max() / max(counts.min(), 1))

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    sys.exit(0)
plt.bar(np.arange(256), counts, width=1.0)
plt.xlabel("difference value")
plt.ylabel("pixels")
plt.savefig(out / "cipher_difference_hist.png", dpi=120)
