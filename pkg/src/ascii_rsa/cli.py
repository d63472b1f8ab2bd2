"""Command-line front end.

Subcommands: keygen, encrypt, decrypt, inspect, repro. Payloads go to the
output stream (stdout when --out is omitted) and all diagnostics to stderr.

Exit codes: 0 success, 1 usage or I/O error, 2 message/cipher integer too
large for the key's modulus, 3 malformed key file, broken envelope framing,
or corrupt vector data.
"""

import argparse
import sys
from pathlib import Path

from . import __version__
from .blocks import CipherEnvelope, block_decrypt, block_encrypt
from .errors import (
    CipherTooLarge,
    FixtureCorrupt,
    FramingError,
    InvalidKey,
    MalformedKeyFile,
    MessageTooLarge,
)
from .keystore import parse_key, parse_private, parse_public, serialize_private, serialize_public
from .numtheory import RandomSource
from .rsa import PublicKey, generate_keypair, paper_decrypt, paper_encrypt
from .vectors import load_vectors, verify_vectors

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_TOO_LARGE = 2
EXIT_FORMAT = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; remap to our exit code 1.
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ascii-rsa", description="Textbook RSA over raw byte messages.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    keygen = sub.add_parser("keygen", help="generate a key pair, write <prefix>.pub and <prefix>.key")
    keygen.add_argument("--bits-p", type=int, default=600, metavar="N", help="bit length of the first prime (default 600)")
    keygen.add_argument("--bits-q", type=int, default=600, metavar="N", help="bit length of the second prime (default 600)")
    keygen.add_argument("--public-exponent", type=int, default=11, metavar="E", help="public exponent (default 11)")
    keygen.add_argument("--mr-rounds", type=int, default=20, metavar="R", help="Miller-Rabin rounds per candidate (default 20)")
    keygen.add_argument("--seed", type=int, default=None, metavar="S", help="seed the random source for reproducible keys")
    keygen.add_argument("--out-prefix", required=True, metavar="PATH", help="path prefix for the two key files")

    for name, help_text in (("encrypt", "encrypt --in with a public key"), ("decrypt", "decrypt --in with a private key")):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--key", required=True, metavar="PATH", help="key file (.pub to encrypt, .key to decrypt)")
        cmd.add_argument("--in", dest="in_path", metavar="PATH", help="input file (default: stdin)")
        cmd.add_argument("--out", dest="out_path", metavar="PATH", help="output file (default: stdout)")
        cmd.add_argument("--mode", choices=("paper", "block"), default="block", help="paper: whole message as one integer; block: framed blocks (default)")
        cmd.add_argument("--armor", choices=("raw", "hex"), default="raw", help="ciphertext form: raw bytes or lowercase hex (default raw)")

    inspect = sub.add_parser("inspect", help="print a key file's kind, sizes and invariant checks")
    inspect.add_argument("--key", required=True, metavar="PATH", help="key file to inspect")

    sub.add_parser("repro", help="replay the built-in golden vectors and report PASS/FAIL per check")

    return parser


def _read_bytes(path: str | None) -> bytes:
    if path is None:
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _write_bytes(path: str | None, data: bytes) -> None:
    if path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(path).write_bytes(data)


def _armor_encode(data: bytes, armor: str) -> bytes:
    if armor == "hex":
        return data.hex().encode("ascii") + b"\n"
    return data


def _armor_decode(data: bytes, armor: str) -> bytes:
    if armor == "raw":
        return data
    try:
        return bytes.fromhex(data.decode("ascii").strip())
    except (UnicodeDecodeError, ValueError) as exc:
        raise FramingError("input is not valid hex armor") from exc


def _cmd_keygen(args) -> int:
    rng = RandomSource(args.seed)
    pair = generate_keypair(args.bits_p, args.bits_q, args.public_exponent, args.mr_rounds, rng)
    Path(args.out_prefix + ".pub").write_text(serialize_public(pair.public), encoding="ascii")
    Path(args.out_prefix + ".key").write_text(serialize_private(pair.private), encoding="ascii")
    print(pair.public.n.bit_length())
    return EXIT_OK


def _cmd_encrypt(args) -> int:
    key = parse_public(Path(args.key).read_text(encoding="ascii"))
    message = _read_bytes(args.in_path)
    if args.mode == "paper":
        cipher = paper_encrypt(message, key)
    else:
        cipher = block_encrypt(message, key).to_bytes()
    _write_bytes(args.out_path, _armor_encode(cipher, args.armor))
    return EXIT_OK


def _cmd_decrypt(args) -> int:
    key = parse_private(Path(args.key).read_text(encoding="ascii"))
    cipher = _armor_decode(_read_bytes(args.in_path), args.armor)
    if args.mode == "paper":
        message = paper_decrypt(cipher, key)
    else:
        message = block_decrypt(CipherEnvelope.from_bytes(cipher), key)
    _write_bytes(args.out_path, message)
    return EXIT_OK


def _cmd_inspect(args) -> int:
    key = parse_key(Path(args.key).read_text(encoding="ascii"))
    if isinstance(key, PublicKey):
        print("kind: public")
        print(f"n: {key.n.bit_length()} bits")
        print(f"e: {key.e.bit_length()} bits")
        print("check 1 < e < n: ok")
    else:
        print("kind: private")
        print(f"n: {key.n.bit_length()} bits")
        print(f"d: {key.d.bit_length()} bits")
        for label in ("p", "q", "phi"):
            value = getattr(key, label)
            if value is not None:
                print(f"{label}: {value.bit_length()} bits")
        print("check 1 < d < n: ok")
        if key.p is not None:
            print("check n = p*q: ok")
        if key.phi is not None:
            print("check 1 < d < phi: ok")
            if key.p is not None:
                print("check phi = (p-1)*(q-1): ok")
    return EXIT_OK


def _cmd_repro(args) -> int:
    checks = verify_vectors(load_vectors())
    for name, passed in checks:
        print(f"{'PASS' if passed else 'FAIL'} {name}")
    return EXIT_OK if all(passed for _, passed in checks) else EXIT_FORMAT


_COMMANDS = {
    "keygen": _cmd_keygen,
    "encrypt": _cmd_encrypt,
    "decrypt": _cmd_decrypt,
    "inspect": _cmd_inspect,
    "repro": _cmd_repro,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except (MessageTooLarge, CipherTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (FramingError, MalformedKeyFile, InvalidKey, FixtureCorrupt) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def app() -> None:
    sys.exit(main())


if __name__ == "__main__":
    app()
