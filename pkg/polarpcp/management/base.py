import json
import os

from django.core.management.base import BaseCommand, CommandError

from ..errors import PhtFormatError, PolarPCPException

# Exit statuses of the experiment commands.
PARAMETER_ERROR = 2
IO_ERROR = 3


class PolarCommand(BaseCommand):
    """
    Base class of the commands; subclasses implement run() instead of
    handle(). Library errors become CommandErrors with the exit status of
    their kind.
    """

    def handle(self, *args, **options):
        try:
            return self.run(*args, **options)
        except PhtFormatError as e:
            raise CommandError(e.message, returncode=IO_ERROR)
        except PolarPCPException as e:
            raise CommandError(e.message, returncode=PARAMETER_ERROR)
        except OSError as e:
            raise CommandError(
                'I/O error: {}'.format(e), returncode=IO_ERROR)

    def run(self, *args, **options):
        raise NotImplementedError(
            'subclasses of PolarCommand must provide a run() method')

    def output_path(self, directory, name):
        os.makedirs(directory, exist_ok=True)
        return os.path.join(directory, name)

    def write_json(self, path, data):
        with open(path, 'w') as f:
            json.dump(data, f, indent=2, sort_keys=True)
            f.write('\n')
