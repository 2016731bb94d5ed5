"""Engine registration system for auto-registering engine classes."""

from typing import Callable, Dict, Type, TYPE_CHECKING

if TYPE_CHECKING:
    from varorder.engines import Engine

# Module-level registry of all engine classes
ENGINE_REGISTRY: Dict[str, Type['Engine']] = {}


def register_engine(engine_id: str) -> Callable:
    """
    Decorator to auto-register engine classes in the engine registry.

    Args:
        engine_id: Unique identifier for this engine

    Returns:
        Decorator function that registers the engine class

    Example:
        @register_engine("direct2")
        class TypeTwoEngine(DirectEngine):
            ...
    """
    def decorator(engine_class: Type['Engine']) -> Type['Engine']:
        """Register the engine class and return it unchanged."""
        engine_class.engine_id = engine_id
        ENGINE_REGISTRY[engine_id] = engine_class
        return engine_class
    return decorator


def create_engine(engine_id: str, **kwargs) -> 'Engine':
    """
    Factory function to create an engine instance by its ID.

    Args:
        engine_id: The unique identifier for the engine
        **kwargs: Passed to the engine constructor

    Returns:
        New instance of the requested engine

    Raises:
        ValueError: If engine_id is not registered
    """
    if engine_id not in ENGINE_REGISTRY:
        raise ValueError(f"Engine ID '{engine_id}' not found in registry. Available engines: {list(ENGINE_REGISTRY.keys())}")
    return ENGINE_REGISTRY[engine_id](**kwargs)


def get_all_engine_ids() -> list[str]:
    """
    Get list of all registered engine IDs.

    Returns:
        List of engine ID strings
    """
    return list(ENGINE_REGISTRY.keys())
