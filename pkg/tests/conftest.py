import sys

OCOC_SMALL = "M n=10; 1-9,2-5,3-6,4-7,8-10"
CHAINED_PARTITION = "P n=9; {1,3,5}{2}{4,6}{7,8,9}"
OC_BLOCK = "M n=10; 1-10,2-6,3-7,4-8,5-9"
OC_BLOCK_IMAGE = "M n=10; 1-6,2-10,3-9,4-8,5-7"
OCOC_LARGE = "M n=18; 1-10,2-8,3-16,4-9,5-18,6-7,11-15,12-14,13-17"
OCOC_LARGE_IMAGE = "M n=18; 1-7,2-16,3-9,4-14,5-8,6-10,11-17,12-18,13-15"
PERM12 = "S n=12; 9 5 6 7 8 3 2 1 4 12 11 10"
PERM12_IMAGE = "S n=12; 5 9 8 7 6 4 1 2 3 11 12 10"
COLOURED_PARTITION = "P n=9; {1,3,5:2}{2}{4,6}:2{7,8,9:2}"
ENVELOPE = "M n=8; 1-8,2-3,4-5,6-7"


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
