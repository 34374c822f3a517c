"""
Request-level entry points shared by the management commands and the API.
"""

import logging

from django.db import transaction

from apps.core.conf import resolve_cap
from apps.core.serializers import GeneratorSetSerializer, validate_input

from .models import CertificationRun
from .pipeline import certify_finiteness
from .serializers import CertificateSerializer

logger = logging.getLogger(__name__)


def certify_request(data, cap=None, with_cayley=False, persist=False, word_length=None):
    """
    Validate a generator-set document, certify it and serialize the result.

    Returns (certificate, payload, run); run is None unless ``persist``.
    """
    validated = validate_input(GeneratorSetSerializer, data)
    cap = resolve_cap(cap, "CLOSURE_CAP")
    certificate = certify_finiteness(
        validated["matrices"],
        cap=cap,
        form=validated.get("form_matrix"),
        word_length=word_length,
        with_cayley=with_cayley,
    )
    payload = CertificateSerializer(certificate, context={"cayley": with_cayley}).data
    run = None
    if persist:
        run = record_run(data, validated, certificate, payload, cap)
    return certificate, payload, run


@transaction.atomic
def record_run(data, validated, certificate, payload, cap):
    field = validated["field"]
    run = CertificationRun.objects.create(
        field_tag=field.tag,
        characteristic=getattr(field, "p", 0),
        dimension=validated["dim"],
        generator_count=len(validated["matrices"]),
        cap=cap,
        verdict=certificate.verdict.value,
        group_order=certificate.order,
        witness_kind=certificate.witness.kind.value if certificate.witness else "",
        input_digest=CertificationRun.digest_for(data),
        request=data,
        certificate=dict(payload),
    )
    logger.info("stored certification run %s: %s", run.pk, run)
    return run
