import hashlib
import json

from django.db import models

from apps.core.models import TimeStampedModel


class CertificationRun(TimeStampedModel):
    """
    Certification run model.
    """

    FIELD_CHOICES = [
        ("Q", "Rationals"),
        ("Fp", "Prime field"),
        ("Fp(t)", "Rational functions over a prime field"),
    ]

    VERDICT_CHOICES = [
        ("finite", "Finite"),
        ("infinite", "Infinite"),
        ("inconclusive", "Inconclusive"),
    ]

    field_tag = models.CharField(max_length=8, choices=FIELD_CHOICES)
    characteristic = models.BigIntegerField(default=0)
    dimension = models.PositiveSmallIntegerField()
    generator_count = models.PositiveIntegerField()
    cap = models.PositiveIntegerField()
    verdict = models.CharField(max_length=16, choices=VERDICT_CHOICES, db_index=True)
    group_order = models.PositiveBigIntegerField(null=True, blank=True)
    witness_kind = models.CharField(max_length=32, blank=True)
    input_digest = models.CharField(max_length=64, db_index=True)
    request = models.JSONField()
    certificate = models.JSONField()

    class Meta:
        db_table = "certification_runs"
        verbose_name = "Certification Run"
        verbose_name_plural = "Certification Runs"
        ordering = ["-created_at"]
        indexes = [
            models.Index(fields=["field_tag", "dimension"], name="certrun_field_dim_idx"),
        ]

    def __str__(self):
        order = f" order {self.group_order}" if self.group_order is not None else ""
        return f"{self.verdict}{order} ({self.field_tag}, d={self.dimension})"

    @staticmethod
    def digest_for(data):
        """
        SHA-256 of the canonical (sorted-key) JSON encoding of an input.
        """
        canonical = json.dumps(data, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    @property
    def is_finite(self):
        return self.verdict == "finite"
