"""System acceptance runs for quarticaudit."""
