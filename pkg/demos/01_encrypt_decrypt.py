"""
Encrypting and decrypting a gray-scale image
============================================

Encrypts the 512x512 ``camera`` image under the published key, writes the
plain, cipher and decrypted images as PGM files, and checks the round trip.
"""
import sys
from pathlib import Path

import numpy as np

from scramblecrack import PAPER_KEY, EquivalentKey, GrayImage, decrypt, derive_keystreams, encrypt, save_pgm
from scramblecrack.testimages import load_test_image

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_out")
out.mkdir(exist_ok=True)

plain = load_test_image("camera")
ks = derive_keystreams(PAPER_KEY, plain.size)
print("first entries of v:", ks.v[:8], " of k:", ks.k[:8])

cipher = encrypt(plain.pixels, ks)
back = decrypt(cipher, EquivalentKey.from_keystreams(ks))

save_pgm(plain, out / "camera.pgm")
save_pgm(GrayImage(plain.width, plain.height, cipher), out / "camera_cipher.pgm")
save_pgm(GrayImage(plain.width, plain.height, back), out / "camera_decrypted.pgm")

# the cipher-image histogram is just the plain histogram shifted per pixel,
# so it looks flat while the multiset of differences is untouched
print("cipher mean / std:", cipher.mean().round(2), cipher.std().round(2))
print("round trip exact:", np.array_equal(back, plain.pixels))
