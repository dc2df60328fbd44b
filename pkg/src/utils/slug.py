"""Slug generation utilities."""

from slugify import slugify as _slugify


def generate_slug(text: str, max_length: int = 100) -> str:
    """
    Generate a file-name-safe slug from a construction label.

    Args:
        text: Label such as "difference |A|=5 |B|=3"
        max_length: Maximum slug length

    Returns:
        Slug like "difference-a-5-b-3", or "code" when nothing survives
    """
    slug = _slugify(text, max_length=max_length)
    return slug if slug else "code"
