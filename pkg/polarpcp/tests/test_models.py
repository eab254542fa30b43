from django.test import TestCase

from polarpcp.models import GridCell, GridRun
from polarpcp.simlab import Cell, Embedding, GridResult, TrialSpec


def make_result():
    spec = TrialSpec(
        m=10, ranks=(1,), rhos=(0.05,), epsilons=(0.1,),
        embeddings=('polar4complex',), trials=4, seed=7)
    counts = {
        (Embedding.POLAR4COMPLEX, 1, 0.05, 0.1, 'M1'): 3,
        (Embedding.POLAR4COMPLEX, 1, 0.05, 0.1, 'M2'): 1,
    }
    return GridResult(spec, counts)


class GridRunTest(TestCase):

    def test_from_result(self):
        run = GridRun.from_result(make_result())

        self.assertEqual(GridRun.objects.count(), 1)
        self.assertEqual(run.cells.count(), 2)
        self.assertEqual((run.seed, run.m, run.trials), (7, 10, 4))
        self.assertEqual(run.variant, 'frequency')

    def test_as_dict(self):
        run = GridRun.from_result(make_result())

        self.assertEqual(run.as_dict(), {
            'seed': 7,
            'm': 10,
            'trials': 4,
            'variant': 'frequency',
            'tol': 1e-7,
            'cells': [
                {'embedding': 'polar4complex', 'r': 1, 'rho': 0.05,
                 'epsilon': 0.1, 'part': 'M1', 'successes': 3, 'trials': 4},
                {'embedding': 'polar4complex', 'r': 1, 'rho': 0.05,
                 'epsilon': 0.1, 'part': 'M2', 'successes': 1, 'trials': 4},
            ]
        })

    def test_fraction(self):
        run = GridRun.from_result(make_result())

        cell = run.cells.get(part='M1')

        self.assertEqual(cell.fraction, 0.75)
        self.assertEqual(
            make_result().fraction('polar4complex', Cell(1, 0.05), 0.1, 'M1'),
            0.75)

    def test_cascade(self):
        run = GridRun.from_result(make_result())

        run.delete()

        self.assertEqual(GridCell.objects.count(), 0)
