// placeholder, filled in by the correlator module implementation
