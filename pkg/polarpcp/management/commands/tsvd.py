from ...pht import read_pht, write_pht
from ...tsvd import TubeTransform, singular_moduli, tsvd
from ..base import PolarCommand


class Command(PolarCommand):
    help = (
        'Tensor SVD of a PHT matrix; writes U.pht, S.pht, V.pht and '
        'summary.json with the singular tube moduli.')

    def add_arguments(self, parser):
        parser.add_argument('input')
        parser.add_argument(
            '--transform', default='dft', choices=['dft', 'skew-dft', 'wht'])
        parser.add_argument('--out-dir', default='.')

    def run(self, *args, **options):
        A = read_pht(options['input'])
        transform = TubeTransform.from_name(options['transform'], A.n)
        factors = tsvd(A, transform)
        moduli = singular_moduli(A, transform)

        out_dir = options['out_dir']
        for name in ('U', 'S', 'V'):
            write_pht(
                getattr(factors, name),
                self.output_path(out_dir, '{}.pht'.format(name)))
        self.write_json(self.output_path(out_dir, 'summary.json'), {
            'shape': list(A.shape),
            'field': A.field.value,
            'transform': options['transform'],
            'singular_moduli': [float(s) for s in moduli],
        })

        self.stdout.write(self.style.SUCCESS(
            'Wrote t-SVD factors to {}.'.format(out_dir)))
