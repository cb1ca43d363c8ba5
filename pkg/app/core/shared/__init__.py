# Shared components across the application