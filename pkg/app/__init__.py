"""fockkit application package."""
