import pytest
from hypothesis import settings

from gappal.alphabet import make_involution

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

HAIRPIN = "GACATTCGAACGT"
AACC = "AACCAACCAACCAACCAA"
HIV92 = (
    "GGACTCGGCTTGCTGAGGTGCACACAGCAAGAGGCGAGAGCGGCGACTGGTGAGTACGCC"
    "AAATTTTGACTAGCGGAGGCTAGAAGGAGAGA"
)


@pytest.fixture
def identity():
    return make_involution("identity")


@pytest.fixture
def dna():
    return make_involution("dna_complement")


@pytest.fixture
def mixed():
    # A<->T swapped, C and G fixed: odd palindromes exist but A/T centers cost an error
    return make_involution("custom", {"A": "T", "T": "A", "C": "C", "G": "G"})


INVOLUTIONS = {
    "identity": make_involution("identity"),
    "dna": make_involution("dna_complement"),
    "mixed": make_involution("custom", {"A": "T", "T": "A", "C": "C", "G": "G"}),
}


# criterion id -> (passed, detail); filled by test_acceptance
RESULTS: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS):
        ok, detail = RESULTS[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
