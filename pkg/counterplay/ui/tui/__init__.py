from .app import RatingBrowserApp, rating_rows

__all__ = ["RatingBrowserApp", "rating_rows"]
