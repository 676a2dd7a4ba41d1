from mintk.scenario import run_scenario

report = run_scenario('example_4_9a')
print(report.to_text())
print(report.to_records())
print('exit code', report.exit_code)
