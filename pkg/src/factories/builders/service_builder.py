from abc import ABC, abstractmethod
from typing import Generic, TypeVar

T = TypeVar('T')

class ServiceBuilder(ABC, Generic[T]):
    """Base builder interface for all service builders"""

    @abstractmethod
    def build_cache(self) -> 'ServiceBuilder':
        pass

    @abstractmethod
    def build_executor(self) -> 'ServiceBuilder':
        pass

    @abstractmethod
    def build(self) -> T:
        pass
