from vgpp_pricing.infrastructure.services.artifact_store import ArtifactStore
from vgpp_pricing.infrastructure.services.iartifact_store import IArtifactStore

__all__ = ["IArtifactStore", "ArtifactStore"]
