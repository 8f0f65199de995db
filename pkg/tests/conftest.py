def pytest_terminal_summary(terminalreporter):
    from test_acceptance import LINES
    if LINES:
        terminalreporter.section("acceptance criteria")
        for cid in sorted(LINES):
            terminalreporter.write_line(LINES[cid])
