"""Command-line front end: ``gappal [INPUT | --text S] [options]``.

Exit status is 0 on success, 2 when some record admits no decomposition and
1 on input or configuration errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, TextIO

from .alphabet import Involution, InvolutionError, make_involution, rank_reduce, read_involution_file
from .decompose import Decomposition, InfeasibleError, maximal_delta_decompose, min_gap_decompose
from .oracle import naive_edit_dist_to_gpal, naive_hamming_dist_to_gpal, naive_is_gpal

log = logging.getLogger("gappal")

EXIT_OK, EXIT_ERROR, EXIT_INFEASIBLE = 0, 1, 2
# quadratic edit-distance re-check is skipped above this piece length
EDIT_RECHECK_LIMIT = 512


class InputError(ValueError):
    pass


@dataclass
class RunConfig:
    mode: str = "exact-gaps"
    metric: str | None = None
    involution: str = "identity"
    g: int = 1
    m: int = 1
    delta: int | None = None
    input: str | None = None
    text: str | None = None
    format: str = "pretty"
    upper: bool = True

    def validate(self) -> None:
        if self.mode == "exact-gaps":
            if self.delta is not None:
                raise InputError("--delta is only accepted with --mode maximal-delta")
            if self.metric is not None:
                raise InputError("--metric is only accepted with --mode maximal-delta")
        elif self.mode == "maximal-delta":
            if self.metric is None:
                raise InputError("--metric is required with --mode maximal-delta")
            if self.delta is None:
                self.delta = 0
            if self.delta < 0:
                raise InputError("--delta must be non-negative")
        else:
            raise InputError(f"unknown mode {self.mode!r}")
        if self.g < 0:
            raise InputError("-g must be non-negative")
        if self.m < 1:
            raise InputError("-m must be at least 1")
        if (self.input is None) == (self.text is None):
            raise InputError("give exactly one of an input path or --text")


def parse_involution(spec: str) -> Involution:
    if spec == "identity":
        return make_involution("identity")
    if spec in ("dna", "dna_complement"):
        return make_involution("dna_complement")
    if spec.startswith("file:"):
        return read_involution_file(spec[5:])
    raise InvolutionError(f"unknown involution {spec!r}; use identity, dna or file:<path>")


def parse_fasta(handle: TextIO, default_id: str = "seq") -> Iterator[tuple[str, str]]:
    """Yield ``(id, sequence)``; input without a ``>`` header is one raw record."""
    lines = [line.strip() for line in handle]
    first = next((line for line in lines if line), None)
    if first is None:
        raise InputError("input contains no sequence")
    if not first.startswith(">"):
        yield default_id, "".join("".join(line.split()) for line in lines)
        return
    name, chunks = None, []
    for lineno, line in enumerate(lines, 1):
        if not line:
            continue
        if line.startswith(">"):
            if name is not None:
                yield name, _record(name, chunks)
            name = line[1:].split()[0] if line[1:].split() else ""
            if not name:
                raise InputError(f"line {lineno}: FASTA header without an identifier")
            chunks = []
        else:
            chunks.append("".join(line.split()))
    yield name, _record(name, chunks)


def _record(name: str, chunks: list) -> str:
    seq = "".join(chunks)
    if not seq:
        raise InputError(f"FASTA record {name!r} has no sequence")
    return seq


def decompose_record(text: str, f: Involution, config: RunConfig) -> Decomposition:
    seq = rank_reduce(text)
    f.check_total(seq)
    if config.mode == "exact-gaps":
        return min_gap_decompose(seq, f, config.g, config.m)
    return maximal_delta_decompose(seq, f, config.g, config.m, config.delta, config.metric)


def verify(text: str, f: Involution, dec: Decomposition, config: RunConfig) -> None:
    """Re-check a decomposition with the brute-force predicates before it is printed."""
    dec.check(len(text), config.g, config.m, config.delta)
    for seg in dec.segments:
        if seg.kind != "palindrome":
            continue
        piece = text[seg.start - 1:seg.end]
        if config.mode == "exact-gaps":
            ok = naive_is_gpal(piece, f)
        elif config.metric == "hamming":
            ok = naive_hamming_dist_to_gpal(piece, f) == seg.errors_used
        elif len(piece) <= EDIT_RECHECK_LIMIT:
            ok = naive_edit_dist_to_gpal(piece, f) == seg.errors_used
        else:
            ok = True
        if not ok:
            raise AssertionError(f"piece {seg.start}..{seg.end} fails its palindrome check")


def render_pretty(seq_id: str, text: str, dec: Decomposition) -> str:
    parts = []
    for seg in dec.segments:
        piece = text[seg.start - 1:seg.end]
        parts.append(f"[{piece}]" if seg.kind == "gap" else piece)
    notes = ", ".join(
        f"{s.start}-{s.end}:{s.errors_used}" for s in dec.segments if s.kind == "palindrome"
    )
    return (
        f">{seq_id} total_gap_length={dec.total_gap_length} gaps={dec.gap_count}\n"
        + " ".join(parts)
        + f"\n# palindromes (start-end:errors) {notes or '-'}"
    )


def render_tsv(seq_id: str, dec: Decomposition) -> list[str]:
    return [
        f"{seq_id}\t{s.start}\t{s.end}\t{s.kind}\t{s.length}\t{s.errors_used}" for s in dec.segments
    ]


def render_json(seq_id: str, text: str, dec: Decomposition) -> str:
    return json.dumps({"seq_id": seq_id, "status": "ok", "length": len(text), **dec.to_dict()})


def run(config: RunConfig, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        config.validate()
        f = parse_involution(config.involution)
        if config.text is not None:
            records = [("text", "".join(config.text.split()))]
        elif config.input == "-":
            records = list(parse_fasta(sys.stdin, "stdin"))
        else:
            path = Path(config.input)
            with open(path) as handle:
                records = list(parse_fasta(handle, path.stem))
        if config.upper:
            records = [(name, seq.upper()) for name, seq in records]
        for _, seq in records:
            f.check_total(seq)
    except (InputError, InvolutionError, OSError, UnicodeDecodeError) as exc:
        print(f"gappal: error: {exc}", file=err)
        return EXIT_ERROR

    status = EXIT_OK
    if config.format == "tsv":
        print("seq_id\tstart\tend\tkind\tlength\terrors_used", file=out)
    for seq_id, text in records:
        log.debug("%s: n=%d mode=%s", seq_id, len(text), config.mode)
        try:
            dec = decompose_record(text, f, config)
        except InfeasibleError as exc:
            status = EXIT_INFEASIBLE
            print(f"gappal: infeasible: {seq_id}: {exc}", file=err)
            if config.format == "json":
                print(json.dumps({"seq_id": seq_id, "status": "infeasible", "reason": str(exc)}), file=out)
            else:
                print(f"#INFEASIBLE\t{seq_id}\t{exc}", file=out)
            continue
        verify(text, f, dec, config)
        if config.format == "json":
            print(render_json(seq_id, text, dec), file=out)
        elif config.format == "tsv":
            print("\n".join(render_tsv(seq_id, dec)), file=out)
        else:
            print(render_pretty(seq_id, text, dec), file=out)
    return status


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # argparse's default status 2 would collide with the infeasible status
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="gappal",
        description="Decompose sequences into generalized palindromes with few, short gaps.",
    )
    parser.add_argument("input", nargs="?", help="FASTA or raw sequence file ('-' for stdin)")
    parser.add_argument("--text", help="inline sequence instead of an input file")
    parser.add_argument("--mode", choices=["exact-gaps", "maximal-delta"], default="exact-gaps")
    parser.add_argument("--metric", choices=["hamming", "edit"])
    parser.add_argument("--involution", default="identity", help="identity, dna, or file:<path> with lines 'X Y'")
    parser.add_argument("-g", type=int, default=1, help="maximum number of gaps (default 1)")
    parser.add_argument("-m", type=int, default=1, help="minimum palindrome length (default 1)")
    parser.add_argument("--delta", type=int, help="errors allowed per palindrome (maximal-delta mode)")
    parser.add_argument("--format", choices=["pretty", "tsv", "json"], default="pretty")
    parser.add_argument("--no-upper", dest="upper", action="store_false", help="keep letter case as given")
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    options = vars(args)
    options.pop("verbose")
    return run(RunConfig(**options))


if __name__ == "__main__":
    sys.exit(main())
