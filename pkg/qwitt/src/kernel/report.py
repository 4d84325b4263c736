from typing import List, TypedDict

VERIFIED = "verified"
REFUTED = "refuted"
SKIPPED = "skipped"
DEVIATION = "deviation"  # report mode: a stated formula disagrees with the bracket, never fails a run


class Claim(TypedDict):
    id: str
    status: str  # "verified", "refuted", "skipped", "deviation"
    evidence: str


def make_claim(claim_id: str, ok: bool, evidence: str) -> Claim:
    return {"id": claim_id, "status": VERIFIED if ok else REFUTED, "evidence": evidence}


def any_refuted(claims: List[Claim]) -> bool:
    return any(claim["status"] == REFUTED for claim in claims)
