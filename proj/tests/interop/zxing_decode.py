#!/usr/bin/env python3
"""Decode PBM (P1) QR images with zxing-cpp and print each payload as hex.

Usage: zxing_decode.py FILE.pbm [FILE.pbm ...]
Prints one line per file: "<path> <version> <ec-level> <mask> <hex>" or
"<path> FAIL".
Exit status 3 when zxing-cpp is not importable.
"""
import sys

try:
    import numpy as np
    import zxingcpp
except ImportError as exc:  # pragma: no cover
    print(f"zxing-cpp unavailable: {exc}", file=sys.stderr)
    sys.exit(3)


def read_pbm(path):
    tokens = []
    with open(path, "r", encoding="ascii") as f:
        for line in f:
            line = line.split("#", 1)[0]
            tokens.extend(line.split())
    if tokens[0] != "P1":
        raise ValueError("not a P1 file")
    width, height = int(tokens[1]), int(tokens[2])
    bits = "".join(tokens[3:])
    if len(bits) != width * height:
        raise ValueError("bit count mismatch")
    dark = np.frombuffer(bits.encode("ascii"), dtype=np.uint8).reshape(height, width) == ord("1")
    return np.where(dark, 0, 255).astype(np.uint8)


def main(paths):
    for path in paths:
        img = read_pbm(path)
        # Upscale so the reader's binarizer sees several pixels per module.
        img = np.kron(img, np.ones((4, 4), dtype=np.uint8))
        results = zxingcpp.read_barcodes(img, formats=zxingcpp.BarcodeFormat.QRCode)
        if len(results) != 1 or not results[0].valid:
            print(f"{path} FAIL")
        else:
            r = results[0]
            extra = r.extra if isinstance(r.extra, dict) else {}
            print(f"{path} {extra.get('Version', '?')} {extra.get('ECLevel', '?')} "
                  f"{extra.get('DataMask', '?')} {bytes(r.bytes).hex()}")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
