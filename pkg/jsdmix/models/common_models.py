from typing import Optional

from pydantic import ConfigDict, Field

from .basemodels import ProtoModel


class Provenance(ProtoModel):
    """
    Provenance information.
    """
    creator: str = Field(..., description="The name of the program that generated the record.")
    version: Optional[str] = Field(None, description="The version of the generating program.")
    routine: Optional[str] = Field(None, description="The routine (module or function) that generated the record.")

    model_config = ConfigDict(extra="allow")

    def __str__(self) -> str:
        return f"{self.__class__.__name__}(creator='{self.creator}' version='{self.version}' routine='{self.routine}')"
