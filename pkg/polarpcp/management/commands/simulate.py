from django.conf import settings

from ...models import GridRun
from ...simlab import Embedding, TrialSpec, run_grid, write_csv
from ...solvers import Variant
from ..base import PolarCommand

VARIANTS = {
    'polar': Variant.FREQUENCY,
    'tensor-rpca': Variant.TENSOR_RPCA,
}


class Command(PolarCommand):
    help = (
        'Run the synthetic low-rank plus sparse recovery grid and write the '
        'success counts as CSV.')

    def add_arguments(self, parser):
        solver = settings.POLARPCP_SOLVER
        parser.add_argument('--m', type=int, default=100)
        parser.add_argument('--ranks', type=int, nargs='+')
        parser.add_argument('--rhos', type=float, nargs='+')
        parser.add_argument(
            '--epsilons', type=float, nargs='+', default=[0.1, 0.05, 0.01])
        parser.add_argument('--trials', type=int, default=10)
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument(
            '--embedding', default='both',
            choices=[e.value for e in Embedding] + ['both'])
        parser.add_argument(
            '--variant', default='polar', choices=sorted(VARIANTS))
        parser.add_argument('--tol', type=float, default=solver['TOL'])
        parser.add_argument(
            '--max-iters', type=int, default=solver['MAX_ITERS'])
        parser.add_argument('--out', default='results.csv')
        parser.add_argument(
            '--save', action='store_true',
            help='Also store the grid in the database.')

    def run(self, *args, **options):
        if options['embedding'] == 'both':
            embeddings = tuple(Embedding)
        else:
            embeddings = (Embedding(options['embedding']),)

        extra = {}
        if options['ranks']:
            extra['ranks'] = tuple(options['ranks'])
        if options['rhos']:
            extra['rhos'] = tuple(options['rhos'])

        spec = TrialSpec(
            m=options['m'], epsilons=tuple(options['epsilons']),
            embeddings=embeddings, trials=options['trials'],
            seed=options['seed'], variant=VARIANTS[options['variant']],
            tol=options['tol'], max_iters=options['max_iters'], **extra)

        result = run_grid(spec, threads=settings.POLARPCP_THREADS)
        write_csv(result, options['out'])

        if options['save']:
            run = GridRun.from_result(result)
            self.stdout.write('Saved grid run {}.'.format(run.id))

        self.stdout.write(self.style.SUCCESS(
            'Wrote {} rows to {}.'.format(
                len(result.rows()), options['out'])))
