# Entry script, same as python -m src.main
import runpy

if __name__ == "__main__":
    runpy.run_module("src.main", run_name="__main__")
