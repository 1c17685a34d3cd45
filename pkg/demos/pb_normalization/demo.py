import os

os.environ.setdefault('KUMMER_SETTINGS_MODULE', 'demos.pb_normalization.settings')

from kummer.conf import settings  # noqa: E402
from kummer.core.poisson_beta import PbParams, pb_evaluate, pb_normalization  # noqa: E402
from kummer.utils.log import configure_logging  # noqa: E402

SHAPES = (0.5, 1.0, 5.0)

RATES = (10.0, 1000.0, 10_000.0)


def main():
    """Checks that the Poisson-Beta distribution sums to one and shows
    which summation method each rate ends up with.
    """

    configure_logging(settings.LOGGING)

    for gamma in RATES:
        evaluation = pb_evaluate(PbParams(1.0, 1.0, gamma, int(gamma // 2)))
        print(f'gamma={gamma:g} method={evaluation.chf.method.name.lower()}')
        for alpha in SHAPES:
            for beta in SHAPES:
                total = pb_normalization(alpha, beta, gamma, settings.DEFAULT_EPS)
                print(f'  alpha={alpha:g} beta={beta:g} total={total:.15f}')


if __name__ == '__main__':
    main()
