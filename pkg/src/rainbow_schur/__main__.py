from rainbow_schur.main import app


def main():
    """Entry point for `python -m rainbow_schur`."""
    app()


if __name__ == "__main__":
    main()
