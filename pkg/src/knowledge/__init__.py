from .branching_vectors import BranchingKnowledgeBase, BranchingVector

__all__ = ['BranchingKnowledgeBase', 'BranchingVector']
