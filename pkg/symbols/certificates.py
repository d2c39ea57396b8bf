"""
Quotient certificates: computable homomorphic images used to tell elements
apart where the word problem is not decided.

Agreement under every certificate is evidence of equality; disagreement under
any one of them proves the two elements differ.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from ring.exceptions import DomainError

from .torus import TorusElement
from .words import SymbolWord, is_kernel_witness, symbol_image, tame_supported, tame_value

logger = logging.getLogger(__name__)

COMMUTATOR = 'commutator'
TAME = 'tame'
DIAGONAL = 'diagonal'


@dataclass(frozen=True)
class QuotientCertificate:
    name: str
    value: str


def certificates_of(word: SymbolWord) -> list[QuotientCertificate]:
    certificates = [QuotientCertificate(COMMUTATOR, str(symbol_image(word)))]
    if tame_supported(word.ring):
        certificates.append(QuotientCertificate(TAME, str(tame_value(word))))
    return certificates


def torus_certificates(element: TorusElement) -> list[QuotientCertificate]:
    """The diagonal image, plus the tame value of the symbol part when available."""
    certificates = [QuotientCertificate(DIAGONAL, str(element.pi()))]
    if tame_supported(element.ring):
        certificates.append(QuotientCertificate(TAME, str(tame_value(element.xi))))
    return certificates


def distinguishing(left: Sequence[QuotientCertificate],
                   right: Sequence[QuotientCertificate]) -> Optional[str]:
    """The name of the first certificate both sides carry and disagree on, else None."""
    theirs = {certificate.name: certificate.value for certificate in right}
    for certificate in left:
        if certificate.name in theirs and theirs[certificate.name] != certificate.value:
            return certificate.name
    return None


def centrality_check(xi: SymbolWord, probe: SymbolWord) -> bool:
    """xi probe xi^-1 and probe agree under every certificate, for a kernel witness xi."""
    if not is_kernel_witness(xi):
        raise DomainError(f"{xi} is not a kernel witness: its image is {symbol_image(xi)}")
    # xi c(u,v) xi^-1 = ^phi(xi) c(u,v), and phi(xi) = 1
    moved = probe.conjugated(symbol_image(xi))
    for candidate in (moved, xi * probe * xi.inverse()):
        name = distinguishing(certificates_of(candidate), certificates_of(probe))
        if name is not None:
            logger.warning(f"Centrality of {xi} fails on {probe} under the {name} certificate")
            return False
    return True
