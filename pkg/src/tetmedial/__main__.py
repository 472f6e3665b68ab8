from tetmedial.cli import run

run()
