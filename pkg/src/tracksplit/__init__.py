"""Train tracks and train-track maps on punctured disks: validation, transition
matrices and dilatations, tight splitting, lifts to the double branched
cover, and a bounded census of maps on the Peacock track."""

__version__ = "0.1.0"
