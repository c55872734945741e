from hypothesis import settings

# exhaustive sweeps elsewhere in the suite can make individual examples
# look slow on loaded machines; wall-clock deadlines add nothing here
settings.register_profile("suite", deadline=None)
settings.load_profile("suite")
