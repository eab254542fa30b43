from django.db import models


class GridRun(models.Model):
    seed = models.IntegerField()
    m = models.IntegerField()
    trials = models.IntegerField()
    variant = models.CharField(max_length=20)
    tol = models.FloatField()
    created = models.DateTimeField(auto_now_add=True)

    @classmethod
    def from_result(cls, result):
        """
        Store a simlab.GridResult with one GridCell per CSV row.
        """
        spec = result.spec
        run = cls.objects.create(
            seed=spec.seed, m=spec.m, trials=spec.trials,
            variant=spec.variant.value, tol=spec.tol)
        GridCell.objects.bulk_create([
            GridCell(
                run=run, embedding=embedding, r=r, rho=rho, epsilon=epsilon,
                part=part, successes=successes, trials=trials)
            for embedding, r, rho, epsilon, part, successes, trials, _
            in result.rows()])
        return run

    def as_dict(self):
        return {
            'seed': self.seed,
            'm': self.m,
            'trials': self.trials,
            'variant': self.variant,
            'tol': self.tol,
            'cells': [c.as_dict() for c in self.cells.all()]
        }


class GridCell(models.Model):
    run = models.ForeignKey(
        GridRun, on_delete=models.CASCADE, related_name='cells')
    embedding = models.CharField(max_length=20)
    r = models.IntegerField()
    rho = models.FloatField()
    epsilon = models.FloatField()
    part = models.CharField(max_length=2)
    successes = models.IntegerField()
    trials = models.IntegerField()

    class Meta:
        ordering = ['embedding', 'r', 'rho', 'epsilon', 'part']

    @property
    def fraction(self):
        return self.successes / self.trials

    def as_dict(self):
        return {
            'embedding': self.embedding,
            'r': self.r,
            'rho': self.rho,
            'epsilon': self.epsilon,
            'part': self.part,
            'successes': self.successes,
            'trials': self.trials
        }
