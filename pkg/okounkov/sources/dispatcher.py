"""Body source dispatcher - picks the source from the shape of an input payload."""
from typing import Any, Dict, Optional, Sequence

from pydantic import ValidationError

from okounkov.errors import SchemaError
from okounkov.logging_config import get_logger
from okounkov.schemas_pkg.surface import SurfaceInputSchema
from okounkov.schemas_pkg.toric import ToricInputSchema

from .adapter import BodySource
from .surface_source import P2FormulaSource, SurfaceBodySource, line_bundle_from_schema, surface_spec_from_schema
from .toric_source import ToricBodySource, toric_input_from_schema

logger = get_logger(__name__)


class BodySourceDispatcher:
    """
    Selects the body source for a JSON payload: ``vertices`` means toric input,
    ``N`` means a blow-up of P^2.
    """

    @classmethod
    def from_payload(cls, payload: Dict[str, Any], points: Optional[Sequence[int]] = None) -> BodySource:
        """
        Build the body source for a payload.

        Args:
            payload: Parsed JSON input of the toric or surface subcommand
            points: Optional override of the chosen toric vertices

        Returns:
            Initialized body source

        Raises:
            SchemaError: If the payload matches neither input shape
        """
        if not isinstance(payload, dict):
            raise SchemaError("input must be a JSON object")
        try:
            if "vertices" in payload:
                schema = ToricInputSchema.model_validate(payload)
                if points is not None:
                    schema = ToricInputSchema.model_validate({**payload, "chosen": list(points)})
                source: BodySource = ToricBodySource(toric_input_from_schema(schema))
            elif "N" in payload:
                schema = SurfaceInputSchema.model_validate(payload)
                if schema.epsilon is not None:
                    source = P2FormulaSource(schema.N, schema.epsilon)
                else:
                    source = SurfaceBodySource(
                        surface_spec_from_schema(schema), line_bundle_from_schema(schema), schema.t_values
                    )
            else:
                raise SchemaError("input has neither 'vertices' (toric) nor 'N' (surface)")
        except ValidationError as exc:
            raise SchemaError(f"input does not match its schema: {exc}") from exc
        logger.debug("body_source_selected", source=source.label())
        return source
