from hypothesis import settings

# Exact arithmetic is slow for unlucky examples; wall-clock deadlines only
# add flakiness here.
settings.register_profile("exact", deadline=None, max_examples=60)
settings.load_profile("exact")
