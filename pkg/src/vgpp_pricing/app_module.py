from injector import Binder, CallableProvider, Injector, Module, noscope, provider, singleton
from mediatr import Mediator

from vgpp_pricing.application.concerns import (
    CalibrateCommandHandler,
    ExoticCommandHandler,
    MultiSimulateCommandHandler,
    PriceCommandHandler,
    SimulateCommandHandler,
    TriangleCommandHandler,
)
from vgpp_pricing.domain.config import OTelOptions, VgppOptions, get_otel_options, get_vgpp_options
from vgpp_pricing.infrastructure.services import ArtifactStore, IArtifactStore


def create_injector() -> Injector:
    return Injector([AppModule()])


class AppModule(Module):
    def configure(self, binder: Binder):
        # Options resolve on first use so that a bad environment surfaces as a usage error
        binder.bind(VgppOptions, to=CallableProvider(get_vgpp_options), scope=singleton)
        binder.bind(OTelOptions, to=CallableProvider(get_otel_options), scope=singleton)
        binder.bind(IArtifactStore, ArtifactStore, scope=singleton)
        for handler in (
            SimulateCommandHandler,
            MultiSimulateCommandHandler,
            PriceCommandHandler,
            TriangleCommandHandler,
            CalibrateCommandHandler,
            ExoticCommandHandler,
        ):
            binder.bind(handler, handler, scope=noscope)

    @singleton
    @provider
    def provide_mediator(self, injector: Injector) -> Mediator:
        def handler_class_manager(handler_class, is_behavior=False):
            return injector.get(handler_class)

        return Mediator(handler_class_manager=handler_class_manager)


injector = create_injector()
