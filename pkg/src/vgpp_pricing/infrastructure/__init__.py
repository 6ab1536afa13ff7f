from vgpp_pricing.infrastructure.services import ArtifactStore, IArtifactStore

__all__ = ["IArtifactStore", "ArtifactStore"]
