# Unit Tests