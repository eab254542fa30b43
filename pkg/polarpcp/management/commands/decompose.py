from django.conf import settings

from ...hyperalgebra import Field
from ...pht import read_pht, write_pht
from ...solvers import SolverConfig, Variant, decompose
from ..base import PolarCommand

VARIANTS = {
    'polar': Variant.FREQUENCY,
    'polar-naive': Variant.NAIVE,
    'tensor-rpca': Variant.TENSOR_RPCA,
}


class Command(PolarCommand):
    help = (
        'Split a PHT matrix into low-rank and sparse parts; writes L.pht, '
        'S.pht and report.json.')

    def add_arguments(self, parser):
        solver = settings.POLARPCP_SOLVER
        parser.add_argument('input')
        parser.add_argument('--out-dir', default='.')
        parser.add_argument(
            '--variant', default='polar', choices=sorted(VARIANTS))
        parser.add_argument(
            '--field', choices=[f.value for f in Field],
            help='Read the input over this field instead of its own.')
        parser.add_argument('--c', type=float, default=solver['C'])
        parser.add_argument('--tol', type=float, default=solver['TOL'])
        parser.add_argument(
            '--max-iters', type=int, default=solver['MAX_ITERS'])
        parser.add_argument(
            '--transform', default='dft', choices=['dft', 'skew-dft', 'wht'])

    def run(self, *args, **options):
        X = read_pht(options['input'])
        if options['field']:
            X = X.as_field(options['field'])

        cfg = SolverConfig(
            c=options['c'], tol=options['tol'],
            max_iters=options['max_iters'],
            mu_factor=settings.POLARPCP_SOLVER['MU_FACTOR'],
            rho_mu=settings.POLARPCP_SOLVER['MU_GROWTH'],
            variant=VARIANTS[options['variant']],
            transform=options['transform'])
        result = decompose(X, cfg)

        out_dir = options['out_dir']
        write_pht(result.L, self.output_path(out_dir, 'L.pht'))
        write_pht(result.S, self.output_path(out_dir, 'S.pht'))
        report = result.report()
        report['variant'] = options['variant']
        report['transform'] = options['transform']
        self.write_json(self.output_path(out_dir, 'report.json'), report)

        message = '{} after {} iterations (residual {:.3g}).'.format(
            'Converged' if result.converged else 'Not converged',
            result.iterations, result.residual_history[-1])
        if result.converged:
            self.stdout.write(self.style.SUCCESS(message))
        else:
            self.stdout.write(self.style.WARNING(message))
