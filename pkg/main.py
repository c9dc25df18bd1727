import sys
import logging

from src.cli.commands import main as cli_main


logging.basicConfig(
    level=logging.WARNING,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    handlers=[
        logging.StreamHandler(sys.stderr)
    ]
)
logger = logging.getLogger('belyi-lab')


if __name__ == '__main__':
    sys.exit(cli_main(sys.argv[1:]))
